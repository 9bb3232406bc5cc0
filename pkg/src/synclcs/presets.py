"""Built-in example systems.

magic-square: the 6x9 parity system of a 3x3 grid (rows sum to 0, columns
sum to 0 except the last, which sums to 1) over Z_2.  It has no classical
solution but a 4-dimensional operator solution.
"""

from __future__ import annotations

from .errors import UnknownExample
from .system import LinearSystem


def magic_square_system() -> LinearSystem:
    rows = []
    for r in range(3):  # grid rows
        row = [0] * 9
        for c in range(3):
            row[3 * r + c] = 1
        rows.append(row)
    for c in range(3):  # grid columns
        row = [0] * 9
        for r in range(3):
            row[3 * r + c] = 1
        rows.append(row)
    return LinearSystem.from_ints(2, rows, [0, 0, 0, 0, 0, 1])


def one_eq_system() -> LinearSystem:
    return LinearSystem.from_ints(2, [[1, 1]], [0])


def p3_demo_system() -> LinearSystem:
    return LinearSystem.from_ints(3, [[1, 2, 0]], [1])


PRESETS = {
    "magic-square": magic_square_system,
    "one-eq": one_eq_system,
    "p3-demo": p3_demo_system,
}


def preset_system(name: str) -> LinearSystem:
    if name not in PRESETS:
        raise UnknownExample(f"unknown example {name!r}; known: {sorted(PRESETS)}")
    return PRESETS[name]()
