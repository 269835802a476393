"""BLAS3-style building blocks over Z/pZ, classic cubic arithmetic.

All routines update their output operand in place and also return it. Each
call adds the multiplication count of the classic algorithm to
``F.mul_count``:

=============  ==========================================
gemm           m n k
trmm / trsm    n m(m-1)/2, plus n m when not unit diagonal
syrdk          n(n+1)/2 k, plus the cost of scaling by D
syrd2k         n(n+1) k, plus the cost of scaling by D
dadd           r(r+1)/2
=============  ==========================================

Symmetric updates compute one triangle and mirror it, so the result is the
full dense symmetric matrix.
"""

from __future__ import annotations

import numpy as np

from . import backend
from .densecore import BlockDiag, _tridiag_times
from .errors import DimensionMismatch, SingularTriangular
from .field import PrimeField


def _check(cond, msg):
    if not cond:
        raise DimensionMismatch(msg)


def gemm(F: PrimeField, C: np.ndarray, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """C <- C - A B."""
    m, k = A.shape
    _check(B.shape[0] == k, f"A is {A.shape}, B is {B.shape}")
    _check(C.shape == (m, B.shape[1]), f"C is {C.shape}, expected {(m, B.shape[1])}")
    F.count(m * B.shape[1] * k)
    if m and k and B.shape[1]:
        C[...] = (C - backend.matmul(A, B, F.p)) % F.p
    return C


def _lower_operand(U: np.ndarray, lower: bool, trans: bool):
    T = U.T if trans else U
    return T, (lower != trans)


def _diag_inverses(F: PrimeField, T: np.ndarray) -> np.ndarray:
    d = np.diagonal(T)
    if np.any(d == 0):
        raise SingularTriangular("zero on the diagonal of a non-unit triangular matrix")
    return np.array([F.inv(int(v)) for v in d], dtype=F.dtype)


def _trsm_left(F: PrimeField, T: np.ndarray, T_lower: bool, B: np.ndarray, unit: bool) -> None:
    """B <- T^{-1} B in place."""
    m, n = B.shape
    p = F.p
    F.count(n * m * (m - 1) // 2 + (0 if unit else n * m))
    if m == 0 or n == 0:
        return
    if T_lower:
        L = T
        work = B
    else:
        L = T[::-1, ::-1]
        work = B[::-1].copy()
    dinv = None if unit else _diag_inverses(F, L)
    if work.dtype == np.int64 and not work.flags.writeable:
        work = work.copy()
    backend.trsm_lower_left(L, work, p, unit, dinv)
    if work is not B:
        B[...] = work[::-1]


def trsm(F: PrimeField, U: np.ndarray, B: np.ndarray, *, side: str = "left",
         lower: bool = True, trans: bool = False, unit: bool = True) -> np.ndarray:
    """B <- op(U)^{-1} B (side='left') or B op(U)^{-1} (side='right')."""
    m = U.shape[0]
    _check(U.shape == (m, m), f"triangular operand must be square, got {U.shape}")
    T, T_lower = _lower_operand(U, lower, trans)
    if side == "left":
        _check(B.shape[0] == m, f"U is {U.shape}, B is {B.shape}")
        _trsm_left(F, T, T_lower, B, unit)
    elif side == "right":
        _check(B.shape[1] == m, f"B is {B.shape}, U is {U.shape}")
        # X T = B  <=>  T^T X^T = B^T
        Bt = B.T.copy()
        _trsm_left(F, T.T, not T_lower, Bt, unit)
        B[...] = Bt.T
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return B


def _trmm_product(F: PrimeField, T: np.ndarray, T_lower: bool, B: np.ndarray, unit: bool) -> np.ndarray:
    m, n = B.shape
    F.count(n * m * (m - 1) // 2 + (0 if unit else n * m))
    if m == 0 or n == 0:
        return B.copy()
    if T_lower:
        return backend.trmm_lower_left(T, B, F.p, unit)
    return backend.trmm_lower_left(T[::-1, ::-1], B[::-1], F.p, unit)[::-1]


def _trmm(F, U, B, side, lower, trans, unit):
    m = U.shape[0]
    _check(U.shape == (m, m), f"triangular operand must be square, got {U.shape}")
    T, T_lower = _lower_operand(U, lower, trans)
    if side == "left":
        _check(B.shape[0] == m, f"U is {U.shape}, B is {B.shape}")
        return _trmm_product(F, T, T_lower, B, unit)
    if side == "right":
        _check(B.shape[1] == m, f"B is {B.shape}, U is {U.shape}")
        return _trmm_product(F, T.T, not T_lower, B.T, unit).T
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def trmm_inplace(F: PrimeField, U: np.ndarray, B: np.ndarray, *, side: str = "left",
                 lower: bool = True, trans: bool = False, unit: bool = True) -> np.ndarray:
    """B <- op(U) B (or B op(U))."""
    B[...] = _trmm(F, U, B, side, lower, trans, unit)
    return B


def trmm_acc(F: PrimeField, C: np.ndarray, U: np.ndarray, B: np.ndarray, *, side: str = "left",
             lower: bool = True, trans: bool = False, unit: bool = True) -> np.ndarray:
    """C <- C - op(U) B (or C - B op(U)); B is left untouched."""
    prod = _trmm(F, U, B, side, lower, trans, unit)
    _check(C.shape == prod.shape, f"C is {C.shape}, product is {prod.shape}")
    C[...] = (C - prod) % F.p
    return C


def _scaled(F: PrimeField, A: np.ndarray, D) -> np.ndarray:
    """A D for D a BlockDiag, a diagonal vector, or None (identity)."""
    if D is None:
        return A
    if isinstance(D, BlockDiag):
        _check(D.order == A.shape[1], f"D of order {D.order} vs A with {A.shape[1]} columns")
        return _tridiag_times(F, A, *D.tridiag(F.dtype))
    d = np.asarray(D)
    if d.ndim == 2:
        d = np.diagonal(d)
    _check(d.shape == (A.shape[1],), f"diagonal of length {d.shape} vs A with {A.shape[1]} columns")
    F.count(A.shape[0] * int(np.count_nonzero(d)))
    return A * d.astype(A.dtype) % F.p


def syrdk(F: PrimeField, C: np.ndarray, A: np.ndarray, D=None) -> np.ndarray:
    """C <- C - A D A^T with D (block) diagonal."""
    n, k = A.shape
    _check(C.shape == (n, n), f"C is {C.shape}, A is {A.shape}")
    if n == 0 or k == 0:
        return C
    AD = _scaled(F, A, D)
    F.count(n * (n + 1) // 2 * k)
    C[...] = (C - backend.sym_product(AD, A, F.p)) % F.p
    return C


def syrd2k(F: PrimeField, C: np.ndarray, A: np.ndarray, B: np.ndarray, D=None) -> np.ndarray:
    """C <- C - A D B^T - B D A^T."""
    n, k = A.shape
    _check(B.shape == (n, k), f"A is {A.shape}, B is {B.shape}")
    _check(C.shape == (n, n), f"C is {C.shape}, A is {A.shape}")
    if n == 0 or k == 0:
        return C
    AD = _scaled(F, A, D)
    F.count(n * (n + 1) * k)
    C[...] = (C - backend.sym2_product(AD, B, F.p)) % F.p
    return C


def dadd(F: PrimeField, X: np.ndarray, delta, U: np.ndarray) -> np.ndarray:
    """X <- X + diag(delta) U, reading only the upper triangle of U."""
    r = U.shape[0]
    delta = np.asarray(delta)
    _check(U.shape == (r, r) and X.shape == (r, r) and delta.shape == (r,),
           f"X {X.shape}, delta {delta.shape}, U {U.shape}")
    F.count(r * (r + 1) // 2)
    X[...] = (X + delta.astype(X.dtype)[:, None] * np.triu(U) % F.p) % F.p
    return X
