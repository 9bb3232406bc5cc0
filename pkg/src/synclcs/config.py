"""Tunable limits for enumeration and search."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_ENUM_CAP = 2**20
DEFAULT_SEARCH_BUDGET = 10**7
DEFAULT_TOL = 1e-9

ENUM_CAP_ENV = "SYNCLCS_ENUM_CAP"
SEARCH_BUDGET_ENV = "SYNCLCS_SEARCH_BUDGET"


@dataclass(frozen=True)
class Limits:
    """Resource caps threaded through enumeration and backtracking code."""

    enum_cap: int = DEFAULT_ENUM_CAP
    search_budget: int = DEFAULT_SEARCH_BUDGET

    @staticmethod
    def from_env() -> "Limits":
        """Read overrides from SYNCLCS_ENUM_CAP / SYNCLCS_SEARCH_BUDGET."""
        cap = int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))
        budget = int(os.environ.get(SEARCH_BUDGET_ENV, DEFAULT_SEARCH_BUDGET))
        return Limits(enum_cap=cap, search_budget=budget)
