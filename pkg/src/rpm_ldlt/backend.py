"""Route hot loops to the numba or the numpy implementation."""

import numpy as np

from . import _config
from . import _numpy_kernels as _np_impl

if _config.HAVE_NUMBA:
    from . import _numba_kernels as _nb_impl
else:  # pragma: no cover
    _nb_impl = None

_INT64_MAX = 2**63 - 1


def kchunk(p: int) -> int:
    """Products of two residues that fit on top of a reduced int64 accumulator."""
    return int(min(2**40, max(1, (_INT64_MAX - p) // max(1, (p - 1) ** 2))))


def impl(*arrays):
    """Implementation module for these operands under the current backend."""
    if _config.BACKEND == "numba" and all(a.dtype == np.int64 for a in arrays):
        return _nb_impl
    return _np_impl


def _c(a):
    return np.ascontiguousarray(a)


def matmul(A, B, p):
    mod = impl(A, B)
    if mod is _nb_impl:
        return mod.matmul_mod(_c(A), _c(B), p, kchunk(p))
    return mod.matmul_mod(A, B, p, kchunk(p))


def trsm_lower_left(L, B, p, unit=True, dinv=None):
    """In place B <- L^{-1} B (``B`` may be a strided view)."""
    mod = impl(L, B)
    if mod is _nb_impl:
        if dinv is None:
            dinv = np.zeros(0, np.int64)
        mod.trsm_lower_left(_c(L), B, p, kchunk(p), unit, np.asarray(dinv, np.int64))
    else:
        mod.trsm_lower_left(L, B, p, kchunk(p), unit, dinv)


def trmm_lower_left(L, B, p, unit=True):
    mod = impl(L, B)
    if mod is _nb_impl:
        return mod.trmm_lower_left(_c(L), _c(B), p, kchunk(p), unit)
    return mod.trmm_lower_left(L, B, p, kchunk(p), unit)


def sym_product(X, Y, p):
    mod = impl(X, Y)
    if mod is _nb_impl:
        return mod.sym_product(_c(X), _c(Y), p, kchunk(p))
    return mod.sym_product(X, Y, p, kchunk(p))


def sym2_product(X, Y, p):
    mod = impl(X, Y)
    if mod is _nb_impl:
        return mod.sym2_product(_c(X), _c(Y), p, kchunk(p))
    return mod.sym2_product(X, Y, p, kchunk(p))


def plduq_inplace(W, p):
    return impl(W).plduq_inplace(W, p)


def crout_sytrf(A, p):
    mod = impl(A)
    if mod is _nb_impl:
        return mod.crout_sytrf(_c(A), p, kchunk(p))
    return mod.crout_sytrf(A, p, kchunk(p))
