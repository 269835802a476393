"""Permutations, block-diagonal pivot matrices and the factorization bundle.

Matrices are plain 2-D numpy arrays in the storage dtype of their
:class:`~rpm_ldlt.field.PrimeField`. Slicing copies (``.copy()``) wherever an
algorithm keeps a block around; writes go back through explicit ranges.

Permutation convention: ``image[i] = j`` means that applying ``P`` sends row
``i`` of the source to row ``j`` of the result. As a 0/1 matrix,
``P[image[i], i] = 1``. For a factorization ``A = P L D L^T P^T`` this makes
``image[i]`` the original index sitting at position ``i`` of the eliminated
order, i.e. ``P^T A P == A[image][:, image]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence, Union

import numpy as np

from .errors import BadBlockSizes, DimensionMismatch
from .field import PrimeField


# --------------------------------------------------------------------------
# permutations


class Permutation:
    __slots__ = ("image",)

    def __init__(self, image):
        img = np.asarray(image, dtype=np.int64).reshape(-1)
        if not np.array_equal(np.sort(img), np.arange(img.size)):
            raise ValueError("image is not a bijection on {0..n-1}")
        self.image = img

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(n))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> "Permutation":
        img = np.arange(n)
        img[i], img[j] = j, i
        return cls(img)

    @classmethod
    def cyclic_shift(cls, i: int, n: int) -> "Permutation":
        """The shift that moves element ``i`` to the front, keeping the others in order."""
        img = np.arange(n)
        img[:i] += 1
        img[i] = 0
        return cls(img)

    @property
    def n(self) -> int:
        return self.image.size

    def __len__(self):
        return self.image.size

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self.image, other.image)

    def __repr__(self):
        return f"Permutation({self.image.tolist()})"

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.image)
        inv[self.image] = np.arange(self.n)
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self . other``: apply ``other`` first."""
        if other.n != self.n:
            raise DimensionMismatch(f"cannot compose orders {self.n} and {other.n}")
        return Permutation(self.image[other.image])

    def apply(self, v):
        v = np.asarray(v)
        if v.shape[0] != self.n:
            raise DimensionMismatch(f"vector of length {v.shape[0]} vs order {self.n}")
        out = np.empty_like(v)
        out[self.image] = v
        return out

    def to_dense(self) -> np.ndarray:
        M = np.zeros((self.n, self.n), dtype=np.int64)
        M[self.image, np.arange(self.n)] = 1
        return M


def invert(P: Permutation) -> Permutation:
    return P.inverse()


def compose(P: Permutation, Q: Permutation) -> Permutation:
    return P.compose(Q)


def permute_rows(P: Permutation, B: np.ndarray) -> np.ndarray:
    """``P B``."""
    if B.shape[0] != P.n:
        raise DimensionMismatch(f"{B.shape[0]} rows vs permutation of order {P.n}")
    out = np.empty_like(B)
    out[P.image] = B
    return out


def permute_rows_inv(P: Permutation, B: np.ndarray) -> np.ndarray:
    """``P^T B``."""
    if B.shape[0] != P.n:
        raise DimensionMismatch(f"{B.shape[0]} rows vs permutation of order {P.n}")
    return B[P.image]


def permute_cols(P: Permutation, B: np.ndarray) -> np.ndarray:
    """``B P^T``: column ``i`` moves to column ``image[i]``."""
    if B.shape[1] != P.n:
        raise DimensionMismatch(f"{B.shape[1]} columns vs permutation of order {P.n}")
    out = np.empty_like(B)
    out[:, P.image] = B
    return out


def permute_cols_inv(P: Permutation, B: np.ndarray) -> np.ndarray:
    """``B P``."""
    if B.shape[1] != P.n:
        raise DimensionMismatch(f"{B.shape[1]} columns vs permutation of order {P.n}")
    return B[:, P.image]


def block_circular_rotation(r: int, m: int, n: int) -> Permutation:
    """Rotation taking block order (r, r, m-r, n-r) back to (r, m-r, r, n-r).

    Used to compact the pivot rows of a zero-leading block: position ``r + k``
    of the compacted order comes from original index ``m + k`` and the
    non-pivot rows ``r..m`` slide down behind them in their original order.
    """
    if r < 0 or r > m or r > n:
        raise BadBlockSizes(f"need 0 <= r <= min(m, n), got r={r}, m={m}, n={n}")
    img = np.concatenate([
        np.arange(r),
        m + np.arange(r),
        r + np.arange(m - r),
        m + r + np.arange(n - r),
    ])
    return Permutation(img)


def interleave_permutation(r: int) -> Permutation:
    """The order-2r permutation pairing index ``i`` with ``r + i``."""
    if r < 0:
        raise BadBlockSizes("r must be non-negative")
    img = np.empty(2 * r, dtype=np.int64)
    img[0::2] = np.arange(r)
    img[1::2] = r + np.arange(r)
    return Permutation(img)


# --------------------------------------------------------------------------
# block diagonal D


@dataclass(frozen=True)
class Scalar:
    d: int
    size = 1


@dataclass(frozen=True)
class AntiDiag:
    x: int
    size = 2


@dataclass(frozen=True)
class AntiTri:
    """The lower antitriangular block [[0, c], [c, d]] (characteristic 2 only)."""

    c: int
    d: int
    size = 2


Block = Union[Scalar, AntiDiag, AntiTri]


@dataclass(frozen=True)
class BlockDiag:
    blocks: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for b in self.blocks:
            if isinstance(b, Scalar) and b.d == 0:
                raise ValueError("Scalar block must be non-zero")
            if isinstance(b, AntiDiag) and b.x == 0:
                raise ValueError("AntiDiag block must be non-zero")
            if isinstance(b, AntiTri) and (b.c == 0 or b.d == 0):
                raise ValueError("AntiTri block needs c != 0 and d != 0")

    @property
    def order(self) -> int:
        return sum(b.size for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def count(self, kind) -> int:
        return sum(isinstance(b, kind) for b in self.blocks)

    @classmethod
    def from_tridiag(cls, dg, sub, blk) -> "BlockDiag":
        blocks = []
        k, r = 0, len(dg)
        while k < r:
            if blk[k] == 0:
                blocks.append(Scalar(int(dg[k])))
                k += 1
            elif int(dg[k + 1]) == 0:
                blocks.append(AntiDiag(int(sub[k])))
                k += 2
            else:
                blocks.append(AntiTri(int(sub[k]), int(dg[k + 1])))
                k += 2
        return cls(tuple(blocks))

    def tridiag(self, dtype=np.int64):
        """``(dg, sub, blk)``: diagonal, coupling D[k, k+1], and block tags."""
        r = self.order
        dg = np.zeros(r, dtype=dtype)
        sub = np.zeros(r, dtype=dtype)
        blk = np.zeros(r, dtype=np.int64)
        k = 0
        for b in self.blocks:
            if isinstance(b, Scalar):
                dg[k] = b.d
                k += 1
                continue
            blk[k], blk[k + 1] = 1, 2
            if isinstance(b, AntiDiag):
                sub[k] = b.x
            else:
                sub[k] = b.c
                dg[k + 1] = b.d
            k += 2
        return dg, sub, blk

    def __add__(self, other: "BlockDiag") -> "BlockDiag":
        return BlockDiag(self.blocks + other.blocks)


def _tridiag_times(F: PrimeField, X: np.ndarray, dg, sub, blk) -> np.ndarray:
    """X T for a symmetric tridiagonal T given as (dg, sub, blk); counts multiplications."""
    p = F.p
    m = X.shape[0]
    out = X * dg % p
    F.count(m * int(np.count_nonzero(dg)))
    first = np.flatnonzero(blk == 1)
    if first.size:
        s = sub[first]
        out[:, first] += X[:, first + 1] * s % p
        out[:, first + 1] += X[:, first] * s % p
        out %= p
        F.count(2 * m * first.size)
    return out


def blockdiag_times(F: PrimeField, D: BlockDiag, X: np.ndarray) -> np.ndarray:
    """``X D``."""
    if X.shape[1] != D.order:
        raise DimensionMismatch(f"{X.shape[1]} columns vs D of order {D.order}")
    return _tridiag_times(F, X, *D.tridiag(F.dtype))


def blockdiag_inverse_tridiag(F: PrimeField, D: BlockDiag):
    """Tridiagonal encoding of D^{-1} (same block pattern)."""
    p = F.p
    r = D.order
    dg = np.zeros(r, dtype=F.dtype)
    sub = np.zeros(r, dtype=F.dtype)
    blk = np.zeros(r, dtype=np.int64)
    k = 0
    for b in D.blocks:
        if isinstance(b, Scalar):
            dg[k] = F.inv(b.d)
            k += 1
            continue
        blk[k], blk[k + 1] = 1, 2
        if isinstance(b, AntiDiag):
            sub[k] = F.inv(b.x)
        else:
            # [[0, c], [c, d]]^{-1} = [[-d/c^2, 1/c], [1/c, 0]]
            ci = F.inv(b.c)
            sub[k] = ci
            dg[k] = -b.d * ci * ci % p
        k += 2
    return dg, sub, blk


def blockdiag_inverse_apply(F: PrimeField, D: BlockDiag, X: np.ndarray) -> np.ndarray:
    """``X D^{-1}`` (the SCAL routine)."""
    if X.shape[1] != D.order:
        raise DimensionMismatch(f"{X.shape[1]} columns vs D of order {D.order}")
    return _tridiag_times(F, X, *blockdiag_inverse_tridiag(F, D))


def blockdiag_to_dense(D: BlockDiag, F: PrimeField | None = None) -> np.ndarray:
    dtype = F.dtype if F is not None else np.int64
    r = D.order
    M = np.zeros((r, r), dtype=dtype)
    dg, sub, blk = D.tridiag(dtype)
    M[np.arange(r), np.arange(r)] = dg
    first = np.flatnonzero(blk == 1)
    M[first, first + 1] = sub[first]
    M[first + 1, first] = sub[first]
    return M


def blockdiag_support(D: BlockDiag) -> np.ndarray:
    """The 0/1 rook placement Psi with D = Psi * (upper bidiagonal)."""
    r = D.order
    S = np.zeros((r, r), dtype=np.int64)
    k = 0
    for b in D.blocks:
        if isinstance(b, Scalar):
            S[k, k] = 1
            k += 1
        else:
            S[k, k + 1] = S[k + 1, k] = 1
            k += 2
    return S


# --------------------------------------------------------------------------
# factorization bundle


@dataclass
class Factorization:
    """``A = P L D L^T P^T`` with ``L`` stored compactly as ``N x r``."""

    P: Permutation
    L: np.ndarray
    D: BlockDiag
    field: PrimeField = dc_field(repr=False)

    @property
    def rank(self) -> int:
        return self.L.shape[1]

    @property
    def order(self) -> int:
        return self.P.n

    def reconstruct(self) -> np.ndarray:
        return reconstruct(self)

    def pivoting_matrix(self) -> np.ndarray:
        from .rpmtools import pivoting_matrix

        return pivoting_matrix(self)

    def check_shape(self) -> None:
        """Raise AssertionError unless the structural invariants hold."""
        N, r = self.L.shape
        assert N == self.P.n, "L rows vs P order"
        assert r == self.D.order, "L columns vs D order"
        lead = self.L[:r, :r]
        assert np.all(np.triu(lead, 1) == 0), "leading block of L not lower triangular"
        assert np.all(np.diagonal(lead) == 1), "leading block of L not unit"
        if not self.field.is_char_two():
            assert self.D.count(AntiTri) == 0, "AntiTri block outside characteristic 2"


def expand_L(F: Factorization) -> np.ndarray:
    """The square unit lower triangular factor, identity-completed."""
    N, r = F.L.shape
    out = np.zeros((N, N), dtype=F.L.dtype)
    out[:, :r] = F.L
    out[np.arange(r, N), np.arange(r, N)] = 1
    return out


def reconstruct(F: Factorization) -> np.ndarray:
    """``P L D L^T P^T`` as a dense symmetric matrix."""
    from . import backend

    fld = F.field
    p = fld.p
    N, r = F.L.shape
    if r == 0:
        return fld.zeros((N, N))
    dg, sub, blk = F.D.tridiag(fld.dtype)
    LD = _tridiag_times(fld, F.L, dg, sub, blk)
    M = backend.sym_product(LD, F.L, p)
    fld.count(N * (N + 1) // 2 * r)
    out = np.empty_like(M)
    out[np.ix_(F.P.image, F.P.image)] = M
    return out


def ensure_square(A: np.ndarray, name: str = "A") -> int:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {A.shape}")
    return A.shape[0]


def concat_blockdiag(parts: Sequence[BlockDiag]) -> BlockDiag:
    blocks: tuple = ()
    for part in parts:
        blocks += part.blocks
    return BlockDiag(blocks)
