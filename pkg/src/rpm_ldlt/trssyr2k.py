"""Upper triangular solution X of X^T U + U^T X = C."""

from __future__ import annotations

import numpy as np

from .errors import CharTwoNonzeroDiagonal, DimensionMismatch, NonUnitTriangular
from .field import PrimeField
from .kernels import syrd2k, trmm_acc, trsm


def _check_unit_upper(U: np.ndarray) -> None:
    n = U.shape[0]
    if U.ndim != 2 or U.shape != (n, n):
        raise NonUnitTriangular(f"U must be square, got {U.shape}")
    if np.any(np.diagonal(U) != 1) or np.any(np.tril(U, -1) != 0):
        raise NonUnitTriangular("U must be unit upper triangular")


def _solve(F: PrimeField, U: np.ndarray, C: np.ndarray) -> None:
    n = U.shape[0]
    if n == 1:
        C[0, 0] = 0 if F.is_char_two() else F.halve(int(C[0, 0]))
        return
    k = n // 2
    U1, U2, U3 = U[:k, :k], U[:k, k:], U[k:, k:]
    C1, C2, C3 = C[:k, :k], C[:k, k:], C[k:, k:]
    _solve(F, U1, C1)
    X1 = np.triu(C1)
    trmm_acc(F, C2, X1, U2, lower=False, trans=True, unit=False)
    trsm(F, U1, C2, lower=False, trans=True, unit=True)
    syrd2k(F, C3, C2.T, U2.T)
    _solve(F, U3, C3)


def trssyr2k(F: PrimeField, U: np.ndarray, C: np.ndarray) -> np.ndarray:
    """Overwrite the upper triangle of ``C`` with X and return ``triu(C)``.

    The strict lower triangle of ``C`` is restored to its input value, so the
    storage keeps a valid symmetric C underneath X.
    """
    _check_unit_upper(U)
    n = U.shape[0]
    if C.shape != (n, n):
        raise DimensionMismatch(f"C is {C.shape}, U is {U.shape}")
    if F.is_char_two() and np.any(np.diagonal(C) % 2 != 0):
        raise CharTwoNonzeroDiagonal("X^T U + U^T X has a zero diagonal in characteristic 2")
    if n == 0:
        return C.copy()
    lower = np.tril(C, -1)
    _solve(F, U, C)
    X = np.triu(C)
    C[...] = X + lower
    return X
