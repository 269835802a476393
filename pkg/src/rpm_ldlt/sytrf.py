"""Symmetric indefinite PLDL^TP^T elimination revealing the rank profile matrix.

Three schedules share one contract:

* ``rec``: halve the matrix, factor the leading block, then handle the
  remaining ``[[0, Y], [Y^T, Z]]`` problem with a PLDUQ of ``Y``.
* ``crout``: iterative elimination with lexicographic pivot search and
  delayed (Crout) updates.
* ``cascade``: ``rec`` above the threshold, ``crout`` below it.

Internally a factorization is a triple ``(perm, L, D)`` where ``perm[i]`` is
the original index placed at position ``i`` and ``L`` is ``N x r``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .densecore import (AntiDiag, AntiTri, BlockDiag, Factorization, Permutation, Scalar,
                        blockdiag_inverse_apply)
from .errors import DimensionMismatch, NotSymmetric, WrongCharacteristic
from .field import PrimeField
from .kernels import gemm, syrd2k, syrdk, trmm_acc, trsm
from .plduq import plduq_raw, split_packed
from .trssyr2k import trssyr2k

DEFAULT_THRESHOLD = 64
VARIANTS = ("rec", "crout", "cascade")
_ALIASES = {"pure_recursive": "rec", "recursive": "rec", "pure_crout": "crout"}


@dataclass(frozen=True)
class SytrfConfig:
    threshold: int = DEFAULT_THRESHOLD
    variant: str = "cascade"

    def __post_init__(self):
        v = _ALIASES.get(self.variant, self.variant)
        if v not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; choose from {VARIANTS}")
        object.__setattr__(self, "variant", v)
        if int(self.threshold) < 1:
            raise ValueError("threshold must be >= 1")


def split_sizes(N: int) -> tuple[int, int]:
    m = N // 2
    return m, N - m


def _empty(F: PrimeField, N: int):
    return np.arange(N), np.zeros((N, 0), dtype=F.dtype), BlockDiag()


def _canonical_tail(perm: np.ndarray, L: np.ndarray, r: int):
    """Sort the non-pivot positions by original index (rows of L follow)."""
    order = np.argsort(perm[r:], kind="stable")
    perm = np.concatenate([perm[:r], perm[r:][order]])
    L = np.concatenate([L[:r], L[r:][order]])
    return perm, L


def _crout(F: PrimeField, A: np.ndarray):
    perm, Lo, dg, sub, blk, r, cnt = backend.crout_sytrf(A, F.p)
    F.count(int(cnt))
    perm = np.asarray(perm, np.int64)
    r = int(r)
    L = Lo[perm][:, :r]
    D = BlockDiag.from_tridiag(dg[:r], sub[:r], blk[:r])
    return _canonical_tail(perm, L, r) + (D,)


def _ldlt(F: PrimeField, A: np.ndarray, cfg: SytrfConfig):
    N = A.shape[0]
    if N == 0:
        return _empty(F, 0)
    if cfg.variant == "crout" or (cfg.variant == "cascade" and N <= cfg.threshold):
        return _crout(F, A)
    if N == 1:
        if A[0, 0] % F.p == 0:
            return _empty(F, 1)
        return np.zeros(1, np.int64), np.ones((1, 1), dtype=F.dtype), BlockDiag((Scalar(int(A[0, 0])),))

    m, n = split_sizes(N)
    perm1, L1c, D1 = _ldlt(F, A[:m, :m], cfg)
    r = D1.order
    Bp = A[:m, m:][perm1]
    X = Bp[:r].copy()
    trsm(F, L1c[:r], X, lower=True, unit=True)
    Y = Bp[r:].copy()
    gemm(F, Y, L1c[r:], X)
    G = blockdiag_inverse_apply(F, D1, X.T.copy())
    Z = A[m:, m:].copy()
    syrdk(F, Z, G, D1)

    perm2, L2, D2 = _zero_leading(F, Y, Z, cfg)
    r2 = D2.order
    rest = np.concatenate([perm1[r:], m + np.arange(n)])
    perm = np.concatenate([perm1[:r], rest[perm2]])
    L = np.zeros((N, r + r2), dtype=F.dtype)
    L[:r, :r] = L1c[:r]
    L[r:, :r] = np.vstack([L1c[r:], G])[perm2]
    L[r:, r:] = L2
    return _canonical_tail(perm, L, r + r2) + (D1 + D2,)


def delta_char2(F: PrimeField, C1: np.ndarray, U1: np.ndarray) -> np.ndarray:
    """Diagonal Delta with ``diag(C1 - U1^T Delta U1) = 0``."""
    if not F.is_char_two():
        raise WrongCharacteristic("the Delta correction only exists in characteristic 2")
    r = U1.shape[0]
    p = F.p
    delta = np.zeros(r, dtype=F.dtype)
    U2 = U1 * U1 % p
    for i in range(r):
        delta[i] = (C1[i, i] - np.dot(delta[:i], U2[:i, i])) % p
    F.count(r * (r - 1) // 2)
    return delta


def _zero_leading(F: PrimeField, Y: np.ndarray, Z: np.ndarray, cfg: SytrfConfig):
    m, n = Y.shape
    p = F.p
    if m == 0:
        return _ldlt(F, Z, cfg)
    if n == 0:
        return _empty(F, m)

    pb, q, r, W = plduq_raw(F, Y)
    if r == 0:
        perm3, L3, D3 = _ldlt(F, Z, cfg)
        perm = np.concatenate([m + perm3, np.arange(m)])
        L = np.vstack([L3, np.zeros((m, L3.shape[1]), dtype=F.dtype)])
        return _canonical_tail(perm, L, D3.order) + (D3,)

    L1, M1, D1, U1, V1 = split_packed(W, r)
    Cp = Z[np.ix_(q, q)]
    C1 = Cp[:r, :r].copy()
    C2 = Cp[:r, r:].copy()
    C3 = Cp[r:, r:].copy()
    char2 = F.is_char_two()
    if char2:
        delta = delta_char2(F, C1, U1)
        syrdk(F, C1, U1.T.copy(), delta)
    else:
        delta = np.zeros(r, dtype=F.dtype)
    X = trssyr2k(F, U1, C1)
    D1inv = np.array([F.inv(int(v)) for v in D1], dtype=F.dtype)
    G1 = X.T * D1inv % p
    F.count(r * (r + 1) // 2)
    if char2:
        X = (X + delta[:, None] * U1) % p
        F.count(r * (r + 1) // 2)
    trmm_acc(F, C2, X, V1, lower=False, trans=True, unit=False)
    trsm(F, U1, C2, lower=False, trans=True, unit=True)
    Y2 = C2
    syrd2k(F, C3, Y2.T.copy(), V1.T.copy())
    if char2:
        syrdk(F, C3, V1.T.copy(), delta)
    G2 = Y2.T * D1inv % p
    F.count(Y2.size)
    perm3, L3, D3 = _ldlt(F, C3, cfg)
    r3 = D3.order

    a, b = pb[:r], pb[r:]
    c, d = m + q[:r], m + q[r:]
    inter = np.empty(2 * r, np.int64)
    inter[0::2], inter[1::2] = a, c
    perm = np.concatenate([inter, d[perm3], b])

    N = m + n
    L = np.zeros((N, 2 * r + r3), dtype=F.dtype)
    L[0:2 * r:2, 0:2 * r:2] = L1
    L[1:2 * r:2, 0:2 * r:2] = G1
    L[1:2 * r:2, 1:2 * r:2] = U1.T
    nd = n - r
    tail = np.zeros((nd, 2 * r), dtype=F.dtype)
    tail[:, 0::2] = G2
    tail[:, 1::2] = V1.T
    L[2 * r:2 * r + nd, :2 * r] = tail[perm3]
    L[2 * r:2 * r + nd, 2 * r:] = L3
    L[2 * r + nd:, 0:2 * r:2] = M1

    blocks = [AntiTri(int(x), int(dl)) if dl else AntiDiag(int(x)) for x, dl in zip(D1, delta)]
    D = BlockDiag(tuple(blocks)) + D3
    return _canonical_tail(perm, L, 2 * r + r3) + (D,)


def _prepare(F: PrimeField, A) -> np.ndarray:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {A.shape}")
    A = F.array(A)
    if not np.array_equal(A, A.T):
        raise NotSymmetric("input matrix is not symmetric")
    return A


def _wrap(F: PrimeField, res) -> Factorization:
    perm, L, D = res
    out = Factorization(P=Permutation(perm), L=np.ascontiguousarray(L), D=D, field=F)
    out.check_shape()
    return out


def ldlt(F: PrimeField, A, cfg: SytrfConfig | None = None) -> Factorization:
    """Factor symmetric ``A`` as ``P L D L^T P^T``; the input is not modified."""
    cfg = cfg or SytrfConfig()
    return _wrap(F, _ldlt(F, _prepare(F, A), cfg))


def ldlt_zero_leading(F: PrimeField, Y, Z, cfg: SytrfConfig | None = None) -> Factorization:
    """Factor ``[[0, Y], [Y^T, Z]]`` with ``Z`` symmetric."""
    cfg = cfg or SytrfConfig()
    Y = F.array(np.asarray(Y))
    Z = _prepare(F, Z)
    if Y.shape[1] != Z.shape[0]:
        raise DimensionMismatch(f"Y is {Y.shape}, Z is {Z.shape}")
    return _wrap(F, _zero_leading(F, Y, Z, cfg))


def ldlt_base_crout(F: PrimeField, A) -> Factorization:
    """Iterative Crout elimination on the whole matrix."""
    return _wrap(F, _crout(F, _prepare(F, A)))
