"""numba-compiled inner loops (int64 storage, modulus < 2**31).

Every routine takes ``kchunk``: how many products of two residues can be
accumulated on top of a reduced value before an int64 overflow. Callers get
it from :func:`rpm_ldlt.backend.kchunk`.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def inv_mod(a, p):
    t, newt, r, newr = 0, 1, p, a % p
    while newr != 0:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr
    return t % p


@njit(cache=True)
def matmul_mod(A, B, p, kchunk):
    m, k = A.shape
    n = B.shape[1]
    C = np.zeros((m, n), np.int64)
    acc = np.zeros(n, np.int64)
    for i in range(m):
        acc[:] = 0
        pending = 0
        for kk in range(k):
            a = A[i, kk]
            if a == 0:
                continue
            for j in range(n):
                acc[j] += a * B[kk, j]
            pending += 1
            if pending == kchunk:
                for j in range(n):
                    acc[j] %= p
                pending = 0
        for j in range(n):
            C[i, j] = acc[j] % p
    return C


@njit(cache=True)
def trsm_lower_left(L, B, p, kchunk, unit, dinv):
    """B <- L^{-1} B in place; only the lower triangle of L is read."""
    m, n = B.shape
    acc = np.zeros(n, np.int64)
    for i in range(m):
        for j in range(n):
            acc[j] = B[i, j]
        pending = 0
        for k in range(i):
            lik = L[i, k]
            if lik == 0:
                continue
            a = p - lik
            for j in range(n):
                acc[j] += a * B[k, j]
            pending += 1
            if pending == kchunk:
                for j in range(n):
                    acc[j] %= p
                pending = 0
        if unit:
            for j in range(n):
                B[i, j] = acc[j] % p
        else:
            s = dinv[i]
            for j in range(n):
                B[i, j] = (acc[j] % p) * s % p


@njit(cache=True)
def trmm_lower_left(L, B, p, kchunk, unit):
    """Return L B with L lower triangular (lower triangle read only)."""
    m, n = B.shape
    out = np.zeros((m, n), np.int64)
    acc = np.zeros(n, np.int64)
    for i in range(m):
        acc[:] = 0
        pending = 0
        top = i if unit else i + 1
        for k in range(top):
            lik = L[i, k]
            if lik == 0:
                continue
            for j in range(n):
                acc[j] += lik * B[k, j]
            pending += 1
            if pending == kchunk:
                for j in range(n):
                    acc[j] %= p
                pending = 0
        if unit:
            for j in range(n):
                out[i, j] = (acc[j] + B[i, j]) % p
        else:
            for j in range(n):
                out[i, j] = acc[j] % p
    return out


@njit(cache=True)
def sym_product(X, Y, p, kchunk):
    """X Y^T for a product known to be symmetric: lower triangle computed, mirrored."""
    n, k = X.shape
    S = np.zeros((n, n), np.int64)
    for i in range(n):
        for j in range(i + 1):
            acc = 0
            pending = 0
            for kk in range(k):
                acc += X[i, kk] * Y[j, kk]
                pending += 1
                if pending == kchunk:
                    acc %= p
                    pending = 0
            v = acc % p
            S[i, j] = v
            S[j, i] = v
    return S


@njit(cache=True)
def sym2_product(X, Y, p, kchunk):
    """X Y^T + Y X^T, lower triangle computed and mirrored."""
    n, k = X.shape
    S = np.zeros((n, n), np.int64)
    for i in range(n):
        for j in range(i + 1):
            acc = 0
            pending = 0
            for kk in range(k):
                acc += X[i, kk] * Y[j, kk]
                pending += 1
                if pending == kchunk:
                    acc %= p
                    pending = 0
                acc += Y[i, kk] * X[j, kk]
                pending += 1
                if pending == kchunk:
                    acc %= p
                    pending = 0
            v = acc % p
            S[i, j] = v
            S[j, i] = v
    return S


@njit(cache=True)
def plduq_inplace(W, p):
    """Right-looking elimination with lexicographic pivot search and rotations.

    On return ``W[:r, :r]`` holds L1 (strict lower), D1 (diagonal) and U1
    (strict upper); ``W[r:, :r]`` holds M1 and ``W[:r, r:]`` holds V1, all
    relative to the row order ``rows`` and column order ``cols``.
    """
    m, n = W.shape
    rows = np.arange(m)
    cols = np.arange(n)
    r = 0
    nzero = 0
    count = 0
    rowbuf = np.zeros(n, np.int64)
    colbuf = np.zeros(m, np.int64)
    while r < m and r < n:
        piv_i = -1
        piv_j = -1
        t = r + nzero
        while t < m:
            for j in range(r, n):
                if W[t, j] != 0:
                    piv_j = j
                    break
            if piv_j >= 0:
                piv_i = t
                break
            nzero += 1
            t += 1
        if piv_i < 0:
            break
        if piv_i != r:
            rowbuf[:] = W[piv_i, :]
            for s in range(piv_i, r, -1):
                W[s, :] = W[s - 1, :]
            W[r, :] = rowbuf
            tmp = rows[piv_i]
            for s in range(piv_i, r, -1):
                rows[s] = rows[s - 1]
            rows[r] = tmp
        if piv_j != r:
            colbuf[:] = W[:, piv_j]
            for s in range(piv_j, r, -1):
                W[:, s] = W[:, s - 1]
            W[:, r] = colbuf
            tmp = cols[piv_j]
            for s in range(piv_j, r, -1):
                cols[s] = cols[s - 1]
            cols[r] = tmp
        dinv = inv_mod(W[r, r], p)
        for t in range(r + 1, m):
            w = W[t, r]
            if w == 0:
                continue
            lt = w * dinv % p
            W[t, r] = lt
            count += 1
            a = p - lt
            for j in range(r + 1, n):
                W[t, j] = (W[t, j] + a * W[r, j]) % p
            count += n - r - 1
        for j in range(r + 1, n):
            W[r, j] = W[r, j] * dinv % p
        count += n - r - 1
        r += 1
    return rows, cols, r, count


@njit(cache=True)
def _dtimes(Lo, o, dg, sub, blk, r, p, out):
    """out[:r] <- D * L[o, :r]^T for the tridiagonal block-diagonal D."""
    count = 0
    for k in range(r):
        b = blk[k]
        v = 0
        if dg[k] != 0:
            v += dg[k] * Lo[o, k] % p
            count += 1
        if b == 1:
            v += sub[k] * Lo[o, k + 1] % p
            count += 1
        elif b == 2:
            v += sub[k - 1] * Lo[o, k - 1] % p
            count += 1
        out[k] = v % p
    return count


@njit(cache=True)
def _schur_column(A, Lo, perm, i, n, o, w, r, p, kchunk, out):
    """out[t] <- A[perm[t], o] - L[perm[t], :r] . w for t in [i, n)."""
    for t in range(i, n):
        ot = perm[t]
        acc = 0
        pending = 0
        for k in range(r):
            acc += Lo[ot, k] * (p - w[k])
            pending += 1
            if pending == kchunk:
                acc %= p
                pending = 0
        out[t] = (acc + A[ot, o]) % p


@njit(cache=True)
def crout_sytrf(A, p, kchunk):
    """Symmetric Crout elimination revealing the rank profile matrix.

    Returns ``(perm, Lo, dg, sub, blk, r, count)`` where ``Lo`` is indexed by
    original row, the compact factor is ``Lo[perm, :r]`` and D is encoded by
    its diagonal ``dg``, first-superdiagonal ``sub`` and block tags ``blk``
    (0 scalar, 1/2 first/second index of a 2x2 block).
    """
    n = A.shape[0]
    perm = np.arange(n)
    Lo = np.zeros((n, n), np.int64)
    dg = np.zeros(n, np.int64)
    sub = np.zeros(n, np.int64)
    blk = np.zeros(n, np.int64)
    w = np.zeros(n, np.int64)
    c = np.zeros(n, np.int64)
    d = np.zeros(n, np.int64)
    seg = np.zeros(n, np.int64)
    char2 = p == 2
    inv2 = (p + 1) // 2
    r = 0
    i = 0
    count = 0
    while i < n:
        oi = perm[i]
        count += _dtimes(Lo, oi, dg, sub, blk, r, p, w)
        _schur_column(A, Lo, perm, i, n, oi, w, r, p, kchunk, c)
        count += (n - i) * r
        j = -1
        for t in range(i, n):
            if c[t] != 0:
                j = t - i
                break
        if j < 0:
            i += 1
            continue
        q = i + j
        x = c[q]
        xinv = inv_mod(x, p)
        if j == 0:
            for t in range(i + 1, n):
                Lo[perm[t], r] = c[t] * xinv % p
            count += n - i - 1
            Lo[oi, r] = 1
            dg[r] = x
            blk[r] = 0
            for s in range(i, r, -1):
                perm[s] = perm[s - 1]
            perm[r] = oi
            r += 1
            i += 1
            continue
        oq = perm[q]
        count += _dtimes(Lo, oq, dg, sub, blk, r, p, w)
        _schur_column(A, Lo, perm, i, n, oq, w, r, p, kchunk, d)
        count += (n - i) * r
        y = d[q]
        if char2:
            ell = 0
            delta = y
        else:
            ell = y * inv2 % p * xinv % p
            delta = 0
            count += 2
        for t in range(i + 1, n):
            if t == q:
                continue
            a = c[t]
            b = d[t]
            beta = a * xinv % p
            if char2:
                alpha = (b + (p - beta) * y) % p * xinv % p
            else:
                alpha = (b + (p - a) * ell) % p * xinv % p
            ot = perm[t]
            Lo[ot, r] = alpha
            Lo[ot, r + 1] = beta
        count += 3 * (n - i - 2)
        Lo[oi, r] = 1
        Lo[oq, r] = ell
        Lo[oq, r + 1] = 1
        dg[r] = 0
        dg[r + 1] = delta
        sub[r] = x
        blk[r] = 1
        blk[r + 1] = 2
        ns = q + 1 - r
        for s in range(ns):
            seg[s] = perm[r + s]
        perm[r] = oi
        perm[r + 1] = oq
        pos = r + 2
        for s in range(ns):
            v = seg[s]
            if v != oi and v != oq:
                perm[pos] = v
                pos += 1
        r += 2
        i += 2
    return perm, Lo, dg, sub, blk, r, count
