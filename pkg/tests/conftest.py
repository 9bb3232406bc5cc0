"""Shared generators and independent brute-force oracles for the suite."""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from synclcs import LinearSystem, ZpVector


def random_system(rng: random.Random, p: int, m: int, n: int) -> LinearSystem:
    A = [[rng.randrange(p) for _ in range(n)] for _ in range(m)]
    b = [rng.randrange(p) for _ in range(m)]
    return LinearSystem.from_ints(p, A, b)


def random_consistent_system(rng: random.Random, p: int, m: int, n: int) -> LinearSystem:
    """Random A with b forced consistent by planting a solution."""
    A = [[rng.randrange(p) for _ in range(n)] for _ in range(m)]
    x = [rng.randrange(p) for _ in range(n)]
    b = [sum(a * v for a, v in zip(row, x)) % p for row in A]
    return LinearSystem.from_ints(p, A, b)


def brute_force_solutions(p: int, A: list[list[int]], b: list[int]) -> list[tuple[int, ...]]:
    """Exhaustive solution search over Z_p^n; the oracle for solvers."""
    n = len(A[0]) if A else 0
    out = []
    for cand in itertools.product(range(p), repeat=n):
        if all(sum(a * v for a, v in zip(row, cand)) % p == bi % p
               for row, bi in zip(A, b)):
            out.append(cand)
    return out


def brute_force_row_solutions(sys: LinearSystem, i: int) -> set[tuple[int, ...]]:
    """All length-n vectors solving row i with support inside the row
    support, by direct enumeration over the support coordinates."""
    p, n = sys.p, sys.n
    row = sys.A.rows[i - 1]
    cols = [j for j in range(n) if row[j] != 0]
    bi = sys.b.entries[i - 1]
    if not cols:
        return {(0,) * n} if bi == 0 else set()
    found = set()
    for assign in itertools.product(range(p), repeat=len(cols)):
        if sum(row[c] * v for c, v in zip(cols, assign)) % p == bi:
            full = [0] * n
            for c, v in zip(cols, assign):
                full[c] = v
            found.add(tuple(full))
    return found


def edges_preserved(G, H, bij) -> bool:
    """Independent pairwise edge-preservation check (no numpy shortcut)."""
    if set(bij.forward) != set(G.vertices) or set(bij.inverse) != set(H.vertices):
        return False
    for u in G.vertices:
        for v in G.vertices:
            if u == v:
                continue
            if G.adjacent(u, v) != H.adjacent(bij.forward[u], bij.forward[v]):
                return False
    return True


def seeded_unitary(d: int, seed: int) -> np.ndarray:
    """Haar-ish random unitary from the QR of a seeded complex Gaussian."""
    gen = np.random.default_rng(seed)
    Z = gen.normal(size=(d, d)) + 1j * gen.normal(size=(d, d))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def zvec(p: int, *entries: int) -> ZpVector:
    return ZpVector(p, tuple(entries))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
