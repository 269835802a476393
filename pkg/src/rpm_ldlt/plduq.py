"""Rank profile revealing PLDUQ decomposition of a rectangular matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .densecore import Permutation
from .field import PrimeField


@dataclass
class PlduqFactorization:
    """``B = P_B [L1; M1] diag(D1) [U1 V1] Q``.

    ``rows``/``cols`` give the pivot orders directly: ``B[rows][:, cols]`` is
    the product of the triangular factors.
    """

    P_B: Permutation
    Q: Permutation
    L1: np.ndarray
    M1: np.ndarray
    D1: np.ndarray
    U1: np.ndarray
    V1: np.ndarray
    rank: int
    rows: np.ndarray
    cols: np.ndarray

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def reconstruct(self, F: PrimeField) -> np.ndarray:
        p = F.p
        Lh = np.vstack([self.L1, self.M1])
        Uh = np.hstack([self.U1, self.V1])
        W = backend.matmul(Lh * self.D1 % p, Uh, p)
        out = np.empty_like(W)
        out[np.ix_(self.rows, self.cols)] = W
        return out


def plduq_raw(F: PrimeField, B: np.ndarray):
    """Eliminate a copy of ``B``; return ``(rows, cols, rank, W)`` with packed factors in W."""
    W = np.array(B, dtype=F.dtype, copy=True) % F.p
    rows, cols, r, cnt = backend.plduq_inplace(W, F.p)
    F.count(int(cnt))
    return np.asarray(rows, np.int64), np.asarray(cols, np.int64), int(r), W


def split_packed(W: np.ndarray, r: int):
    """``(L1, M1, D1, U1, V1)`` from the packed elimination result."""
    lead = W[:r, :r]
    one = np.eye(r, dtype=W.dtype)
    L1 = np.tril(lead, -1) + one
    U1 = np.triu(lead, 1) + one
    D1 = np.diagonal(lead).copy()
    return L1, W[r:, :r].copy(), D1, U1, W[:r, r:].copy()


def plduq(F: PrimeField, B: np.ndarray) -> PlduqFactorization:
    """Lexicographic-pivoting elimination with cyclic rotations.

    The pivot is the first non-zero entry of the first non-zero row of the
    current Schur complement; rows and columns are moved into place by
    rotations, so non-pivot rows and columns keep their relative order.
    """
    rows, cols, r, W = plduq_raw(F, B)
    L1, M1, D1, U1, V1 = split_packed(W, r)
    return PlduqFactorization(
        P_B=Permutation(rows), Q=Permutation(cols).inverse(),
        L1=L1, M1=M1, D1=D1, U1=U1, V1=V1, rank=r, rows=rows, cols=cols)


def rpm_of_plduq(Fz: PlduqFactorization, m: int | None = None, n: int | None = None) -> np.ndarray:
    """``P_B [[I_r, 0], [0, 0]] Q`` as an m x n 0/1 matrix."""
    m0, n0 = Fz.shape
    m = m0 if m is None else m
    n = n0 if n is None else n
    R = np.zeros((m, n), dtype=np.int64)
    r = Fz.rank
    R[Fz.rows[:r], Fz.cols[:r]] = 1
    return R
