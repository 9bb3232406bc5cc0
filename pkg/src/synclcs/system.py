"""The linear-constraint-system model: per-row supports, per-row restricted
solution sets, the compatibility predicate, and system validation."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .config import DEFAULT_ENUM_CAP
from .errors import (
    DimensionMismatch,
    NotASolution,
    NotPrime,
    ParseError,
    RowOutOfRange,
)
from .zp import ZpMatrix, ZpVector, enumerate_affine, gauss_solve, is_prime, support


@dataclass(frozen=True)
class LinearSystem:
    """A game parameter: prime p, m x n matrix A and length-m vector b.

    b has length m (one entry per equation); a length-n b is rejected.
    """

    p: int
    A: ZpMatrix
    b: ZpVector

    def __post_init__(self):
        if self.A.p != self.p or self.b.p != self.p:
            raise DimensionMismatch("component moduli disagree with system modulus")
        if len(self.b) != self.A.m:
            raise DimensionMismatch(
                f"b has length {len(self.b)}, expected m = {self.A.m}"
            )

    @property
    def m(self) -> int:
        return self.A.m

    @property
    def n(self) -> int:
        return self.A.n

    def homogeneous(self) -> "LinearSystem":
        return LinearSystem(self.p, self.A, ZpVector.zero(self.p, self.m))

    @staticmethod
    def from_ints(p: int, A: list[list[int]], b: list[int]) -> "LinearSystem":
        return LinearSystem(p, ZpMatrix(p, tuple(tuple(r) for r in A)), ZpVector(p, tuple(b)))

    @staticmethod
    def from_json(doc: dict) -> "LinearSystem":
        try:
            p = int(doc["p"])
            A = [[int(e) for e in row] for row in doc["A"]]
            b = [int(e) for e in doc["b"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed system document: {exc}") from exc
        widths = {len(row) for row in A}
        if len(widths) > 1:
            raise ParseError("ragged rows in A")
        return LinearSystem.from_ints(p, A, b)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "A": [list(r) for r in self.A.rows],
            "b": list(self.b.entries),
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def _check_row(self, i: int):
        if not 1 <= i <= self.m:
            raise RowOutOfRange(f"row {i} outside 1..{self.m}")


@dataclass(frozen=True)
class RowData:
    """Support and restricted solution set of one equation."""

    index: int
    V: frozenset[int]
    S: tuple[ZpVector, ...]


def row_support(sys: LinearSystem, i: int) -> set[int]:
    """Support of row i of A (1-based column indices)."""
    sys._check_row(i)
    return support(sys.A.row(i))


def row_solutions(
    sys: LinearSystem, i: int, cap: int = DEFAULT_ENUM_CAP
) -> list[ZpVector]:
    """All x with row_i . x = b_i and supp(x) inside the row support.

    Vectors have full length n, zero outside the support.  Order follows
    the affine enumeration of the restricted system (deterministic).  A
    zero row yields [0] when b_i = 0 and [] otherwise.
    """
    sys._check_row(i)
    p, n = sys.p, sys.n
    cols = sorted(row_support(sys, i))
    bi = sys.b.entry(i)
    if not cols:
        return [ZpVector.zero(p, n)] if bi == 0 else []
    row = sys.A.row(i)
    restricted = ZpMatrix(p, (tuple(row.entry(c) for c in cols),))
    sol = gauss_solve(restricted, ZpVector(p, (bi,)))
    assert sol is not None  # a single nonzero equation is always solvable
    out = []
    for small in enumerate_affine(sol, cap=cap):
        full = [0] * n
        for c, val in zip(cols, small.entries):
            full[c - 1] = val
        out.append(ZpVector(p, tuple(full)))
    return out


def row_data(sys: LinearSystem, i: int, cap: int = DEFAULT_ENUM_CAP) -> RowData:
    return RowData(i, frozenset(row_support(sys, i)), tuple(row_solutions(sys, i, cap)))


def is_row_solution(sys: LinearSystem, i: int, x: ZpVector) -> bool:
    """Membership test for the restricted solution set of row i."""
    sys._check_row(i)
    if x.p != sys.p or len(x) != sys.n:
        return False
    if not support(x) <= row_support(sys, i):
        return False
    return sys.A.row(i).dot(x) == sys.b.entry(i)


def compatible(sys: LinearSystem, i: int, j: int, x: ZpVector, y: ZpVector) -> bool:
    """True iff x and y agree on every shared support coordinate.

    x must solve row i and y row j; anything else raises NotASolution.
    """
    if not is_row_solution(sys, i, x):
        raise NotASolution(f"x is not a restricted solution of row {i}")
    if not is_row_solution(sys, j, y):
        raise NotASolution(f"y is not a restricted solution of row {j}")
    shared = row_support(sys, i) & row_support(sys, j)
    return all(x.entry(k) == y.entry(k) for k in shared)


@dataclass
class ValidationRecord:
    name: str
    level: str  # "pass" | "warning" | "failure"
    message: str

    def to_json(self) -> dict:
        return {"name": self.name, "level": self.level, "message": self.message}


@dataclass
class ValidationReport:
    records: list[ValidationRecord] = field(default_factory=list)

    def add(self, name: str, level: str, message: str):
        self.records.append(ValidationRecord(name, level, message))

    @property
    def ok(self) -> bool:
        return all(r.level != "failure" for r in self.records)

    @property
    def warnings(self) -> list[ValidationRecord]:
        return [r for r in self.records if r.level == "warning"]

    def to_json(self) -> dict:
        return {
            "records": [r.to_json() for r in self.records],
            "verdict": "pass" if self.ok else "fail",
        }


def validate_system(sys: LinearSystem) -> ValidationReport:
    """Structural and semantic checks; verdicts are carried in the report."""
    report = ValidationReport()
    report.add("modulus-prime", "pass", f"p = {sys.p} is prime")
    report.add("shapes", "pass", f"A is {sys.m}x{sys.n}, b has length {sys.m}")

    for i in range(1, sys.m + 1):
        if sys.A.row(i).is_zero() and sys.b.entry(i) != 0:
            report.add(
                "zero-row-contradiction",
                "warning",
                f"row {i} is zero with b_{i} != 0: its solution set is empty, "
                "so the game algebra is the zero algebra",
            )

    seen: dict[tuple, int] = {}
    for i in range(1, sys.m + 1):
        key = (sys.A.rows[i - 1], sys.b.entry(i))
        if key in seen:
            report.add(
                "duplicate-rows", "warning", f"row {i} duplicates row {seen[key]}"
            )
        else:
            seen[key] = i

    if gauss_solve(sys.A, sys.b) is None:
        report.add(
            "classical-solvability",
            "warning",
            "system inconsistent (no classical solution)",
        )
    else:
        report.add("classical-solvability", "pass", "system has a classical solution")
    return report


def validate_document(doc: dict) -> tuple[LinearSystem | None, ValidationReport]:
    """Pre-construction validation of a raw system document.

    Structural problems (non-prime modulus, bad shapes) become failure
    records instead of exceptions, so callers can render them.
    """
    report = ValidationReport()
    try:
        p = int(doc["p"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("missing or non-integer field 'p'")
    if not is_prime(p):
        report.add("modulus-prime", "failure", f"modulus {p} is not prime")
        return None, report
    try:
        sys_ = LinearSystem.from_json(doc)
    except (NotPrime, DimensionMismatch) as exc:
        report.add("shapes", "failure", str(exc))
        return None, report
    full = validate_system(sys_)
    return sys_, full
