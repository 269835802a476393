"""Pure-numpy counterparts of :mod:`rpm_ldlt._numba_kernels`.

Same signatures and results. These also serve ``object`` arrays of Python
ints, the storage used for moduli >= 2**31.
"""

import numpy as np

_FLOAT_EXACT = 2**53
_BLOCK = 64


def inv_mod(a, p):
    return pow(int(a), -1, p)


def _float_chunk(p):
    if p > 2**26:
        return 0
    return max(1, (_FLOAT_EXACT - p) // max(1, (p - 1) ** 2))


def matmul_mod(A, B, p, kchunk):
    m, k = A.shape
    n = B.shape[1]
    if A.dtype == object or B.dtype == object:
        if k == 0:
            return np.zeros((m, n), dtype=object)
        return np.mod(A.astype(object).dot(B.astype(object)), p)
    if k == 0 or m == 0 or n == 0:
        return np.zeros((m, n), np.int64)
    fchunk = _float_chunk(p)
    if fchunk:
        # BLAS in double precision stays exact while the partial sums stay below 2**53
        Af = A.astype(np.float64)
        Bf = B.astype(np.float64)
        acc = np.zeros((m, n), np.float64)
        for s in range(0, k, fchunk):
            acc += Af[:, s:s + fchunk] @ Bf[s:s + fchunk]
            np.fmod(acc, p, out=acc)
        return acc.astype(np.int64)
    acc = np.zeros((m, n), np.int64)
    for s in range(0, k, kchunk):
        acc += A[:, s:s + kchunk] @ B[s:s + kchunk]
        acc %= p
    return acc


def trsm_lower_left(L, B, p, kchunk, unit, dinv):
    m = B.shape[0]
    if m <= _BLOCK:
        for i in range(m):
            if i:
                B[i] = (B[i] - matmul_mod(L[i:i + 1, :i], B[:i], p, kchunk)[0]) % p
            if not unit:
                B[i] = B[i] * dinv[i] % p
        return
    h = m // 2
    trsm_lower_left(L[:h, :h], B[:h], p, kchunk, unit, None if unit else dinv[:h])
    B[h:] = (B[h:] - matmul_mod(L[h:, :h], B[:h], p, kchunk)) % p
    trsm_lower_left(L[h:, h:], B[h:], p, kchunk, unit, None if unit else dinv[h:])


def trmm_lower_left(L, B, p, kchunk, unit):
    T = np.tril(L)
    if unit:
        np.fill_diagonal(T, 1)
    return matmul_mod(T, B, p, kchunk)


def sym_product(X, Y, p, kchunk):
    n = X.shape[0]
    S = np.zeros((n, n), dtype=X.dtype)
    for s in range(0, n, _BLOCK):
        e = min(n, s + _BLOCK)
        S[s:e, :e] = matmul_mod(X[s:e], Y[:e].T, p, kchunk)
    low = np.tril(S)
    return low + np.tril(S, -1).T


def sym2_product(X, Y, p, kchunk):
    n = X.shape[0]
    S = np.zeros((n, n), dtype=X.dtype)
    for s in range(0, n, _BLOCK):
        e = min(n, s + _BLOCK)
        S[s:e, :e] = (matmul_mod(X[s:e], Y[:e].T, p, kchunk)
                      + matmul_mod(Y[s:e], X[:e].T, p, kchunk)) % p
    return np.tril(S) + np.tril(S, -1).T


def _rotate(a, src, dst, axis=0):
    """Move index ``src`` to ``dst`` (dst <= src), shifting the rest by one."""
    if src == dst:
        return
    idx = np.arange(dst, src + 1)
    new = np.concatenate(([src], idx[:-1]))
    if axis == 0:
        a[dst:src + 1] = a[new]
    else:
        a[:, dst:src + 1] = a[:, new]


def plduq_inplace(W, p):
    m, n = W.shape
    rows = np.arange(m)
    cols = np.arange(n)
    r = 0
    nzero = 0
    count = 0
    while r < m and r < n:
        piv_i = piv_j = -1
        t = r + nzero
        while t < m:
            nz = np.flatnonzero(W[t, r:])
            if nz.size:
                piv_i, piv_j = t, r + int(nz[0])
                break
            nzero += 1
            t += 1
        if piv_i < 0:
            break
        _rotate(W, piv_i, r, 0)
        _rotate(rows, piv_i, r, 0)
        _rotate(W, piv_j, r, 1)
        _rotate(cols, piv_j, r, 0)
        dinv = inv_mod(W[r, r], p)
        col = W[r + 1:, r]
        live = np.flatnonzero(col)
        if live.size:
            ell = col[live] * dinv % p
            W[r + 1 + live, r] = ell
            W[np.ix_(r + 1 + live, np.arange(r + 1, n))] = (
                W[np.ix_(r + 1 + live, np.arange(r + 1, n))]
                - np.multiply.outer(ell, W[r, r + 1:]) % p) % p
            count += live.size * (n - r)
        W[r, r + 1:] = W[r, r + 1:] * dinv % p
        count += n - r - 1
        r += 1
    return rows, cols, r, count


def _dtimes(Lo, o, dg, sub, blk, r, p, out):
    count = 0
    for k in range(r):
        v = 0
        if dg[k] != 0:
            v += int(dg[k]) * int(Lo[o, k])
            count += 1
        if blk[k] == 1:
            v += int(sub[k]) * int(Lo[o, k + 1])
            count += 1
        elif blk[k] == 2:
            v += int(sub[k - 1]) * int(Lo[o, k - 1])
            count += 1
        out[k] = v % p
    return count


def crout_sytrf(A, p, kchunk):
    n = A.shape[0]
    dt = A.dtype
    perm = np.arange(n)
    Lo = np.zeros((n, n), dtype=dt)
    dg = np.zeros(n, dtype=dt)
    sub = np.zeros(n, dtype=dt)
    blk = np.zeros(n, np.int64)
    w = np.zeros(n, dtype=dt)
    char2 = p == 2
    inv2 = (p + 1) // 2
    r = i = count = 0

    def column(o, wv):
        rows_ = perm[i:]
        prod = matmul_mod(Lo[np.ix_(rows_, np.arange(r))], wv[:r].reshape(r, 1), p, kchunk)[:, 0]
        return (A[rows_, o] - prod) % p

    while i < n:
        oi = perm[i]
        count += _dtimes(Lo, oi, dg, sub, blk, r, p, w)
        c = column(oi, w)
        count += (n - i) * r
        nz = np.flatnonzero(c)
        if nz.size == 0:
            i += 1
            continue
        j = int(nz[0])
        q = i + j
        x = int(c[j])
        xinv = inv_mod(x, p)
        if j == 0:
            Lo[perm[i + 1:], r] = c[1:] * xinv % p
            count += n - i - 1
            Lo[oi, r] = 1
            dg[r] = x
            blk[r] = 0
            perm[r + 1:i + 1] = perm[r:i].copy()
            perm[r] = oi
            r += 1
            i += 1
            continue
        oq = perm[q]
        count += _dtimes(Lo, oq, dg, sub, blk, r, p, w)
        d = column(oq, w)
        count += (n - i) * r
        y = int(d[j])
        if char2:
            ell, delta = 0, y
        else:
            ell, delta = y * inv2 % p * xinv % p, 0
            count += 2
        mask = np.ones(n - i, bool)
        mask[0] = mask[j] = False
        a = c[mask]
        b = d[mask]
        beta = a * xinv % p
        if char2:
            alpha = (b - beta * y % p) % p * xinv % p
        else:
            alpha = (b - a * ell % p) % p * xinv % p
        tgt = perm[i:][mask]
        Lo[tgt, r] = alpha
        Lo[tgt, r + 1] = beta
        count += 3 * (n - i - 2)
        Lo[oi, r] = 1
        Lo[oq, r] = ell
        Lo[oq, r + 1] = 1
        dg[r] = 0
        dg[r + 1] = delta
        sub[r] = x
        blk[r] = 1
        blk[r + 1] = 2
        seg = perm[r:q + 1].copy()
        rest = seg[(seg != oi) & (seg != oq)]
        perm[r] = oi
        perm[r + 1] = oq
        perm[r + 2:q + 1] = rest
        r += 2
        i += 2
    return perm, Lo, dg, sub, blk, r, count
