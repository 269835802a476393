"""Test matrix generators and the timing / counting harness."""

from __future__ import annotations

import statistics
import time
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import backend
from .errors import BadRank, NonpositiveTime, OracleMismatchExhausted
from .field import PrimeField
from .plduq import plduq, plduq_raw
from .rpmtools import is_rook_placement, rpm_bruteforce
from .sytrf import SytrfConfig, ldlt

KINDS = ("rpm-random", "generic", "dense-random", "zero-block")
BENCH_VARIANTS = ("rec", "crout", "cascade", "plduq")
ORACLE_MAX_N = 64
RETRIES = 8


def _check_rank(n: int, r: int) -> None:
    if n < 0 or not 0 <= r <= n:
        raise BadRank(f"rank {r} outside [0, {n}]")


def _place(R: np.ndarray, idx: np.ndarray, n_diag: int) -> None:
    """Put ``n_diag`` diagonal ones on idx[:n_diag], pair up the rest."""
    for i in idx[:n_diag]:
        R[i, i] = 1
    rest = idx[n_diag:]
    for i, j in zip(rest[0::2], rest[1::2]):
        R[i, j] = R[j, i] = 1


def random_symmetric_rpm(n: int, r: int, seed=None) -> np.ndarray:
    """A random symmetric n x n rook placement with r ones.

    The number of diagonal ones is drawn first (same parity as r), then r
    distinct indices; every symmetric placement has positive probability.
    """
    _check_rank(n, r)
    rng = np.random.default_rng(seed)
    R = np.zeros((n, n), dtype=np.int64)
    n_diag = int(rng.choice(np.arange(r % 2, r + 1, 2)))
    _place(R, rng.permutation(n)[:r], n_diag)
    return R


def _random_lower(F: PrimeField, n: int, rng, unit: bool) -> np.ndarray:
    L = np.tril(F.random((n, n), rng), -1)
    L[np.arange(n), np.arange(n)] = 1 if unit else F.random(n, rng, nonzero=True)
    return L


def _congruence(F: PrimeField, L: np.ndarray, M: np.ndarray) -> np.ndarray:
    p = F.p
    return backend.matmul(backend.matmul(L, M, p), np.ascontiguousarray(L.T), p)


def matrix_with_rpm(R, p: int, seed=None) -> np.ndarray:
    """A symmetric matrix whose rank profile matrix is ``R``.

    Built as ``L S L^T`` with L lower triangular and invertible and S a
    random symmetric matrix supported exactly on the ones of R. Every leading
    block of A is then ``L11 S[:i, :j] L22^T`` with invertible outer factors,
    so it has the rank of ``R[:i, :j]``. Small outputs are still checked
    against the oracle.
    """
    R = np.asarray(R)
    n = R.shape[0]
    if R.shape != (n, n) or not is_rook_placement(R) or not np.array_equal(R, R.T):
        raise ValueError("R must be a symmetric rook placement")
    F = PrimeField(p)
    rng = np.random.default_rng(seed)
    ii, jj = np.nonzero(np.triu(R))
    for _ in range(RETRIES):
        S = F.zeros((n, n))
        vals = F.random(len(ii), rng, nonzero=True)
        S[ii, jj] = vals
        S[jj, ii] = vals
        A = _congruence(F, _random_lower(F, n, rng, unit=False), S)
        if n > ORACLE_MAX_N or np.array_equal(rpm_bruteforce(A, p), R):
            return A
    raise OracleMismatchExhausted(f"no matrix with the requested profile after {RETRIES} draws")


def generic_rank_profile_matrix(n: int, r: int, p: int, seed=None) -> np.ndarray:
    """``L diag(d_1..d_r, 0..0) L^T`` with L unit lower: first r leading minors non-zero."""
    _check_rank(n, r)
    F = PrimeField(p)
    rng = np.random.default_rng(seed)
    d = F.zeros(n)
    d[:r] = F.random(r, rng, nonzero=True)
    L = _random_lower(F, n, rng, unit=True)
    return backend.matmul(L * d % p, np.ascontiguousarray(L.T), p)


def _rank(F: PrimeField, M) -> int:
    return plduq_raw(F, M)[2]


def dense_random_matrix(n: int, r: int, p: int, seed=None) -> np.ndarray:
    """``X S X^T`` with X (n x r) of full column rank and S symmetric invertible."""
    _check_rank(n, r)
    F = PrimeField(p)
    rng = np.random.default_rng(seed)
    if r == 0:
        return F.zeros((n, n))
    while True:
        X = F.random((n, r), rng)
        if _rank(F, X) == r:
            break
    while True:
        S = np.triu(F.random((r, r), rng))
        S = (S + np.triu(S, 1).T) % p
        if _rank(F, S) == r:
            break
    return backend.matmul(backend.matmul(X, S, p), np.ascontiguousarray(X.T), p)


def zero_block_matrix(n: int, r: int, p: int, seed=None) -> np.ndarray:
    """Rank r matrix ``[[0, Y], [Y^T, Z]]`` with a zero leading block of order n // 2."""
    _check_rank(n, r)
    rng = np.random.default_rng(seed)
    m = n // 2
    lo, hi = max(0, r - (n - m)), min(m, r // 2)
    k = int(rng.integers(lo, hi + 1))
    R = np.zeros((n, n), dtype=np.int64)
    top = rng.permutation(m)[:k]
    bottom = m + rng.permutation(n - m)
    for i, j in zip(top, bottom[:k]):
        R[i, j] = R[j, i] = 1
    rem = r - 2 * k
    n_diag = int(rng.choice(np.arange(rem % 2, rem + 1, 2)))
    _place(R, bottom[k:k + rem], n_diag)
    return matrix_with_rpm(R, p, rng)


def generate(kind: str, n: int, r: int, p: int, seed=None) -> np.ndarray:
    if kind == "rpm-random":
        _check_rank(n, r)
        rng = np.random.default_rng(seed)
        return matrix_with_rpm(random_symmetric_rpm(n, r, rng), p, rng)
    if kind == "generic":
        return generic_rank_profile_matrix(n, r, p, seed)
    if kind == "dense-random":
        return dense_random_matrix(n, r, p, seed)
    if kind == "zero-block":
        return zero_block_matrix(n, r, p, seed)
    raise ValueError(f"unknown generator kind {kind!r}; choose from {KINDS}")


def effective_gfops(n: int, r: int, seconds: float) -> float:
    """``(r^3/3 + n^2 r - r^2 n) / (1e9 seconds)``."""
    if not seconds > 0:
        raise NonpositiveTime(f"time must be positive, got {seconds}")
    return (r**3 / 3 + n * n * r - r * r * n) / (1e9 * seconds)


@dataclass
class BenchRecord:
    n: int
    r: int
    field: int
    variant: str
    seconds: float
    mul_count: int
    effective_gfops: float

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def row(self) -> list:
        return list(asdict(self).values())


def _factor_once(F: PrimeField, A: np.ndarray, variant: str, threshold: int):
    F.reset_counter()
    t0 = time.perf_counter()
    if variant == "plduq":
        r = plduq(F, A).rank
    else:
        r = ldlt(F, A, SytrfConfig(threshold, variant)).rank
    dt = time.perf_counter() - t0
    return r, dt, F.reset_counter()


def run_bench(sizes, kind: str = "rpm-random", variants=("cascade",), p: int = 8388593,
              seed: int = 0, reps: int = 3, threshold: int = 64, rank_frac: float | None = None):
    """One record per (size, variant); seconds is the median over ``reps``."""
    if rank_frac is None:
        rank_frac = 1.0 if kind == "generic" else 0.5
    F = PrimeField(p)
    for v in variants:
        if v not in BENCH_VARIANTS:
            raise ValueError(f"unknown variant {v!r}; choose from {BENCH_VARIANTS}")
    records = []
    warm = set()
    for n in sizes:
        r_target = int(round(rank_frac * n))
        A = generate(kind, n, r_target, p, seed)
        for v in variants:
            if v not in warm:  # JIT compile outside the timed runs
                _factor_once(F, A, v, threshold)
                warm.add(v)
            times = []
            for _ in range(max(1, reps)):
                r, dt, muls = _factor_once(F, A, v, threshold)
                times.append(dt)
            sec = max(statistics.median(times), 1e-9)
            records.append(BenchRecord(n, r, p, v, sec, muls, effective_gfops(n, r, sec)))
    return records
