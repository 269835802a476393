"""Rank profile matrix oracles, pivoting matrices and strictification.

The oracles below deliberately use their own tiny elimination routine over
Python integers (or numpy rows) and share nothing with the factorization code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .densecore import (AntiTri, BlockDiag, Factorization, Permutation, Scalar,
                        blockdiag_support, reconstruct)


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank by textbook Gaussian elimination on a list of Python int rows."""
    M = [[v % p for v in row] for row in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, p)
        for i in range(rank + 1, len(M)):
            f = M[i][col] * inv % p
            if f:
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    return _rank_mod_p([[int(v) for v in row] for row in A], p)


def leading_ranks(A, p: int) -> np.ndarray:
    """``R[i, j] = rank(A[:i, :j])`` for every leading submatrix, computed one by one."""
    A = np.asarray(A)
    m, n = A.shape
    rows = [[int(v) for v in row] for row in A]
    R = np.zeros((m + 1, n + 1), dtype=np.int64)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            R[i, j] = _rank_mod_p([r[:j] for r in rows[:i]], p)
    return R


def rpm_literal(A, p: int) -> np.ndarray:
    """Rank profile matrix from the ranks of all leading submatrices.

    A 1 sits at (i, j) exactly when the leading rank grows in both directions
    there: ``r(i+1, j+1) - r(i, j+1) - r(i+1, j) + r(i, j) = 1``.
    """
    R = leading_ranks(A, p)
    return (R[1:, 1:] - R[:-1, 1:] - R[1:, :-1] + R[:-1, :-1]).astype(np.int64)


def rpm_bruteforce(A, p: int) -> np.ndarray:
    """Rank profile matrix by inserting rows one at a time into an echelon basis.

    The rows of ``A[:i]`` span a space with an echelon basis whose leading
    columns are distinct, so ``rank(A[:i, :j])`` counts leading columns below j.
    Row i therefore contributes a 1 exactly at the new leading column it adds.
    """
    A = np.asarray(A)
    m, n = A.shape
    dt = np.int64 if p < 2**31 else object
    basis = np.zeros((n, n), dtype=dt)
    have = np.zeros(n, dtype=bool)
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        v = np.array([int(x) % p for x in A[i]], dtype=dt)
        while True:
            nz = np.flatnonzero(v)
            if nz.size == 0:
                break
            c = int(nz[0])
            if have[c]:
                v = (v - int(v[c]) * basis[c] % p) % p
                continue
            basis[c] = v * pow(int(v[c]), -1, p) % p
            have[c] = True
            out[i, c] = 1
            break
    return out


def is_rook_placement(R) -> bool:
    R = np.asarray(R)
    return bool(np.all((R == 0) | (R == 1)) and np.all(R.sum(axis=0) <= 1) and np.all(R.sum(axis=1) <= 1))


def pivoting_matrix(F: Factorization, N: int | None = None) -> np.ndarray:
    """``P (Psi + 0) P^T`` with Psi the support pattern of D."""
    N = F.order if N is None else N
    r = F.rank
    Pi = np.zeros((N, N), dtype=np.int64)
    if r:
        perm = F.P.image[:r]
        Pi[np.ix_(perm, perm)] = blockdiag_support(F.D)
    return Pi


@dataclass
class StrictifyStats:
    blocks: int = 0
    touched: int = 0


def strictify(F: Factorization, stats: StrictifyStats | None = None) -> Factorization:
    """Trade every antitriangular block for two scalars.

    For a block [[0, c], [c, d]] at positions (k, k+1) with L[k+1, k] = x:
    remove x from column k, swap the two columns, add c/d times the new
    column k+1 to column k, then swap rows k and k+1 (absorbed in P).
    Only the two columns of L below row k are touched.
    """
    stats = stats if stats is not None else StrictifyStats()
    if F.D.count(AntiTri) == 0:
        return F
    fld = F.field
    p = fld.p
    L = F.L.copy()
    perm = F.P.image.copy()
    N = L.shape[0]
    blocks = []
    k = 0
    for b in F.D.blocks:
        if not isinstance(b, AntiTri):
            blocks.append(b)
            k += b.size
            continue
        c, d = b.c, b.d
        x = int(L[k + 1, k])
        ck = L[k:, k]
        ck1 = L[k:, k + 1]
        if x:
            ck[...] = (ck - x * ck1 % p) % p
        lam = c * fld.inv(d) % p
        new_k = (ck1 + lam * ck % p) % p
        ck1[...] = ck
        ck[...] = new_k
        L[[k, k + 1]] = L[[k + 1, k]]
        perm[[k, k + 1]] = perm[[k + 1, k]]
        fld.count(2 * (N - k) + 1)
        stats.blocks += 1
        stats.touched += 3 * (N - k) + 2
        blocks.append(Scalar(d % p))
        blocks.append(Scalar(-c * c * fld.inv(d) % p))
        k += 2
    out = Factorization(P=Permutation(perm), L=L, D=BlockDiag(tuple(blocks)), field=fld)
    out.check_shape()
    return out


@dataclass
class RevealReport:
    reconstruction_ok: bool
    rpm_ok: bool
    rank: int

    @property
    def ok(self) -> bool:
        return self.reconstruction_ok and self.rpm_ok


def verify_revealing(A, F: Factorization) -> RevealReport:
    A = F.field.array(np.asarray(A))
    if A.shape != (F.order, F.order):
        return RevealReport(False, False, F.rank)
    rec = bool(np.array_equal(reconstruct(F), A))
    rpm = bool(np.array_equal(pivoting_matrix(F), rpm_bruteforce(A, F.field.p)))
    return RevealReport(rec, rpm, F.rank)
