"""Small matrix helpers that work for complex128 arrays and for object
arrays of exact cyclotomic scalars alike."""

from __future__ import annotations

import math

import numpy as np


def is_exact(M: np.ndarray) -> bool:
    """True when M carries exact cyclotomic entries instead of floats."""
    return M.dtype == object


def frob(M: np.ndarray) -> float:
    """Frobenius norm as a float; exactly 0.0 for an exactly-zero matrix."""
    if is_exact(M):
        return math.sqrt(sum(abs(e) ** 2 for e in M.flat))
    return float(np.linalg.norm(M))


def dagger(M: np.ndarray) -> np.ndarray:
    return M.conj().T


def eye_like(M: np.ndarray) -> np.ndarray:
    d = M.shape[0]
    if is_exact(M):
        sample = M[0, 0]
        out = np.empty((d, d), dtype=object)
        for i in range(d):
            for j in range(d):
                out[i, j] = sample.one_like() if i == j else sample.zero_like()
        return out
    return np.eye(d, dtype=complex)


def zeros_like_mat(M: np.ndarray) -> np.ndarray:
    d = M.shape[0]
    if is_exact(M):
        sample = M[0, 0]
        out = np.empty((d, d), dtype=object)
        out[:] = sample.zero_like()
        return out
    return np.zeros((d, d), dtype=complex)


def mat_power(M: np.ndarray, n: int) -> np.ndarray:
    """M**n by repeated multiplication; negative n uses the conjugate
    transpose, valid because all matrices fed through here are unitary."""
    if n < 0:
        return mat_power(dagger(M), -n)
    result = eye_like(M)
    for _ in range(n):
        result = result @ M
    return result


def residual_identity(M: np.ndarray) -> float:
    return frob(M - eye_like(M))


def commutator_residual(A: np.ndarray, B: np.ndarray) -> float:
    return frob(A @ B - B @ A)
