import numpy as np
import pytest
from hypothesis import given, strategies as st

from rpm_ldlt.errors import BadRank, NonpositiveTime
from rpm_ldlt.field import PrimeField
from rpm_ldlt.genbench import (KINDS, BenchRecord, effective_gfops, generate,
                               generic_rank_profile_matrix, matrix_with_rpm, random_symmetric_rpm,
                               run_bench)
from rpm_ldlt.rpmtools import is_rook_placement, rank_mod_p, rpm_bruteforce


def _det(M, p):
    M = [[int(v) % p for v in row] for row in M]
    n, det = len(M), 1
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c] % p
        inv = pow(M[c][c], -1, p)
        for i in range(c + 1, n):
            f = M[i][c] * inv % p
            M[i] = [(a - f * b) % p for a, b in zip(M[i], M[c])]
    return det % p


def test_random_symmetric_rpm_examples():
    assert not random_symmetric_rpm(5, 0, 1).any()
    seen = {tuple(random_symmetric_rpm(2, 2, s).ravel()) for s in range(40)}
    assert seen == {(1, 0, 0, 1), (0, 1, 1, 0)}
    R = random_symmetric_rpm(4, 3, 7)
    assert (R == random_symmetric_rpm(4, 3, 7)).all()
    assert (R == R.T).all() and is_rook_placement(R) and R.sum() == 3
    with pytest.raises(BadRank):
        random_symmetric_rpm(3, 4, 0)


@given(st.integers(0, 20), st.data(), st.integers(0, 2**31))
def test_random_symmetric_rpm_is_symmetric_rook(n, data, seed):
    r = data.draw(st.integers(0, n))
    R = random_symmetric_rpm(n, r, seed)
    assert (R == R.T).all() and is_rook_placement(R) and R.sum() == r


def test_matrix_with_rpm_examples():
    A = matrix_with_rpm(np.eye(5, dtype=int), 7, 0)
    assert (rpm_bruteforce(A, 7) == np.eye(5)).all()
    assert not matrix_with_rpm(np.zeros((4, 4), int), 7, 0).any()
    A = matrix_with_rpm(np.array([[0, 1], [1, 0]]), 7, 3)
    assert A[0, 0] == 0 and A[0, 1] == A[1, 0] != 0
    with pytest.raises(ValueError):
        matrix_with_rpm(np.array([[1, 1], [1, 0]]), 7, 0)


@given(st.sampled_from([2, 3, 8388593]), st.integers(0, 48), st.data(), st.integers(0, 2**31))
def test_matrix_with_rpm_has_requested_profile(p, n, data, seed):
    R = random_symmetric_rpm(n, data.draw(st.integers(0, n)), seed)
    A = matrix_with_rpm(R, p, seed)
    assert (A == A.T).all()
    assert (rpm_bruteforce(A, p) == R).all()


def test_generic_examples():
    A = generic_rank_profile_matrix(2, 2, 7, 5)
    assert _det(A[:1, :1], 7) and _det(A, 7)
    assert not generic_rank_profile_matrix(3, 0, 7, 5).any()
    A = generic_rank_profile_matrix(2, 1, 7, 5)
    assert A[0, 0] != 0 and rank_mod_p(A, 7) == 1
    with pytest.raises(BadRank):
        generic_rank_profile_matrix(2, 3, 7, 0)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("p", [2, 3, 8388593])
def test_generators_symmetric_with_advertised_rank(kind, p):
    for n, r in [(1, 1), (6, 3), (17, 17), (20, 0), (33, 12)]:
        A = generate(kind, n, r, p, n + r)
        assert (A == A.T).all() and rank_mod_p(A, p) == r
        assert (A == generate(kind, n, r, p, n + r)).all()
        if kind == "generic":
            R = np.zeros((n, n), int)
            R[np.arange(r), np.arange(r)] = 1
            assert (rpm_bruteforce(A, p) == R).all()
        if kind == "zero-block":
            assert not A[:n // 2, :n // 2].any()


def test_effective_gfops():
    assert round(effective_gfops(1000, 1000, 2.58e-2), 2) == 12.92
    assert round(effective_gfops(100, 100, 4.95e-4), 3) == 0.673
    assert effective_gfops(50, 0, 1.0) == 0
    assert effective_gfops(100, 40, 1.0) > effective_gfops(100, 40, 2.0)
    with pytest.raises(NonpositiveTime):
        effective_gfops(10, 10, 0)
    with pytest.raises(NonpositiveTime):
        effective_gfops(10, 10, -1.0)


def test_run_bench_smoke():
    recs = run_bench([64], "rpm-random", ["cascade"], reps=1)
    assert len(recs) == 1 and recs[0].mul_count > 0 and recs[0].n == 64
    assert BenchRecord.header() == ["n", "r", "field", "variant", "seconds", "mul_count",
                                    "effective_gfops"]
    recs = run_bench([32], "generic", ["rec", "plduq"], reps=1)
    assert [r.variant for r in recs] == ["rec", "plduq"] and recs[0].r == recs[1].r == 32
