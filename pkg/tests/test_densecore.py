import numpy as np
import pytest
from hypothesis import given, strategies as st

from rpm_ldlt.densecore import (AntiDiag, AntiTri, BlockDiag, Factorization, Permutation, Scalar,
                                block_circular_rotation, blockdiag_inverse_apply,
                                blockdiag_support, blockdiag_to_dense, compose, expand_L,
                                interleave_permutation, invert, permute_cols, permute_cols_inv,
                                permute_rows, permute_rows_inv, reconstruct)
from rpm_ldlt.errors import BadBlockSizes, DimensionMismatch
from rpm_ldlt.field import PrimeField

from conftest import mm, same

perms = st.integers(0, 12).flatmap(lambda n: st.permutations(list(range(n))))


def test_permute_rows_examples():
    B = np.array([[1, 2], [3, 4]])
    assert (permute_rows(Permutation.identity(2), B) == B).all()
    assert permute_rows(Permutation.swap(2, 0, 1), B).tolist() == [[3, 4], [1, 2]]
    rows = np.array([[0], [1], [2]])  # r0, r1, r2
    assert permute_rows(Permutation.cyclic_shift(2, 3), rows).ravel().tolist() == [2, 0, 1]


def test_permute_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        permute_rows(Permutation.identity(3), np.zeros((2, 2)))
    with pytest.raises(DimensionMismatch):
        permute_cols(Permutation.identity(3), np.zeros((2, 2)))


@given(perms, st.integers(0, 2**31))
def test_permute_roundtrip(img, seed):
    P = Permutation(img)
    n = P.n
    B = np.random.default_rng(seed).integers(0, 100, (n, 3))
    assert (permute_rows(invert(P), permute_rows(P, B)) == B).all()
    assert (permute_rows_inv(P, permute_rows(P, B)) == B).all()
    C = B.T.copy()
    assert (permute_cols_inv(P, permute_cols(P, C)) == C).all()
    # agree with the dense 0/1 matrix
    Pd = P.to_dense()
    assert (permute_rows(P, B) == Pd @ B).all()
    assert (permute_cols(P, C) == C @ Pd.T).all()


def test_compose_examples():
    P = Permutation([2, 0, 1])
    assert compose(P, invert(P)) == Permutation.identity(3)
    assert compose(Permutation.identity(3), P) == P
    c = compose(Permutation.swap(3, 0, 1), Permutation.swap(3, 1, 2))
    e = np.eye(3, dtype=int)
    for i in range(3):
        assert (c.apply(e[i]) == Permutation.swap(3, 0, 1).apply(Permutation.swap(3, 1, 2).apply(e[i]))).all()
    assert sorted(c.image.tolist()) == [0, 1, 2] and all(c.image[i] != i for i in range(3))


def test_compose_order_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(Permutation.identity(2), Permutation.identity(3))


@given(perms.flatmap(lambda a: st.tuples(st.just(a), st.permutations(a))))
def test_compose_is_sequential_application(pq):
    P, Q = Permutation(pq[0]), Permutation(pq[1])
    v = np.arange(P.n) * 10
    assert (compose(P, Q).apply(v) == P.apply(Q.apply(v))).all()
    assert (compose(P, Q).to_dense() == P.to_dense() @ Q.to_dense()).all()


def _pc_dense(r, m, n):
    """The block matrix [[I_r,0,0,0],[0,0,I_r,0],[0,I_{m-r},0,0],[0,0,0,I_{n-r}]] mapping old to new order."""
    N = m + n
    order = list(range(r)) + list(range(m, m + r)) + list(range(r, m)) + list(range(m + r, N))
    M = np.zeros((N, N), dtype=int)
    for new, old in enumerate(order):
        M[new, old] = 1
    return M


def test_block_circular_rotation_examples():
    assert block_circular_rotation(2, 2, 3) == Permutation.identity(5)
    assert block_circular_rotation(0, 3, 2) == Permutation.identity(5)
    # r=1, m=2, n=1: old index 2 goes to position 1, old 1 to position 2
    assert block_circular_rotation(1, 2, 1).image.tolist() == [0, 2, 1]
    # the same statement with a second trailing index (n=2)
    assert block_circular_rotation(1, 2, 2).image.tolist() == [0, 2, 1, 3]
    with pytest.raises(BadBlockSizes):
        block_circular_rotation(3, 2, 5)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_block_circular_rotation_matches_block_matrix(r, a, b):
    m, n = r + a, r + b
    P = block_circular_rotation(r, m, n)
    x = np.arange(m + n)
    assert (_pc_dense(r, m, n) @ x == x[P.image]).all()


def test_interleave_examples():
    assert interleave_permutation(1) == Permutation.identity(2)
    assert interleave_permutation(2).image.tolist() == [0, 2, 1, 3]
    assert interleave_permutation(3).image.tolist() == [0, 3, 1, 4, 2, 5]


@given(st.integers(0, 16))
def test_interleave_makes_antidiagonal_blocks(r):
    d = np.arange(1, r + 1)
    M = np.zeros((2 * r, 2 * r), dtype=int)
    M[np.arange(r), r + np.arange(r)] = d
    M[r + np.arange(r), np.arange(r)] = d
    img = interleave_permutation(r).image
    conj = M[np.ix_(img, img)]
    expect = blockdiag_to_dense(BlockDiag(tuple(AntiDiag(int(x)) for x in d)))
    assert (conj == expect).all()


def test_blockdiag_support_examples():
    assert blockdiag_support(BlockDiag((Scalar(5),))).tolist() == [[1]]
    assert blockdiag_support(BlockDiag((AntiDiag(3),))).tolist() == [[0, 1], [1, 0]]
    assert blockdiag_support(BlockDiag((AntiTri(1, 1),))).tolist() == [[0, 1], [1, 0]]


def test_blockdiag_validates_blocks():
    with pytest.raises(ValueError):
        BlockDiag((Scalar(0),))
    with pytest.raises(ValueError):
        BlockDiag((AntiDiag(0),))
    with pytest.raises(ValueError):
        BlockDiag((AntiTri(1, 0),))


def test_blockdiag_inverse_apply_examples():
    F = PrimeField(7)
    assert blockdiag_inverse_apply(F, BlockDiag((Scalar(2),)), np.array([[6]])).tolist() == [[3]]
    X = np.array([[1, 2], [3, 4]])
    Y = blockdiag_inverse_apply(F, BlockDiag((AntiDiag(3),)), X)
    assert Y.tolist() == [[2 * 5 % 7, 1 * 5 % 7], [4 * 5 % 7, 3 * 5 % 7]]
    F2 = PrimeField(2)
    Dinv = blockdiag_inverse_apply(F2, BlockDiag((AntiTri(1, 1),)), np.eye(2, dtype=np.int64))
    assert Dinv.tolist() == [[1, 1], [1, 0]]
    assert same(mm(blockdiag_to_dense(BlockDiag((AntiTri(1, 1),))), Dinv, 2), np.eye(2))


def _random_blockdiag(F, rng, k):
    blocks = []
    for _ in range(k):
        t = rng.integers(3 if F.is_char_two() else 2)
        v = lambda: int(rng.integers(1, F.p))
        blocks.append([Scalar, AntiDiag, None][t](v()) if t < 2 else AntiTri(v(), v()))
    return BlockDiag(tuple(blocks))


@given(st.sampled_from([2, 3, 7, 8388593]), st.integers(0, 8), st.integers(0, 2**31))
def test_blockdiag_inverse_is_inverse(p, k, seed):
    F = PrimeField(p)
    rng = np.random.default_rng(seed)
    D = _random_blockdiag(F, rng, k)
    r = D.order
    Dinv = blockdiag_inverse_apply(F, D, F.eye(r))
    assert same(mm(blockdiag_to_dense(D), Dinv, p), np.eye(r))
    S = blockdiag_support(D)
    assert (S == S.T).all() and S.sum() == r
    assert (S.sum(0) <= 1).all() and (S.sum(1) <= 1).all()
    assert BlockDiag.from_tridiag(*D.tridiag()) == D


def test_blockdiag_to_dense_examples():
    assert blockdiag_to_dense(BlockDiag()).shape == (0, 0)
    D = BlockDiag((Scalar(2), AntiDiag(3)))
    assert blockdiag_to_dense(D).tolist() == [[2, 0, 0], [0, 0, 3], [0, 3, 0]]


def _fact(F, P, L, D):
    return Factorization(P=Permutation(P), L=F.array(L), D=BlockDiag(tuple(D)), field=F)


def test_expand_L():
    F = PrimeField(7)
    f = _fact(F, [0, 1], [[1, 0], [4, 1]], [AntiDiag(1)])
    assert (expand_L(f) == f.L).all()
    g = _fact(F, [1, 0, 2], [[1], [3], [5]], [Scalar(2)])
    assert expand_L(g).tolist() == [[1, 0, 0], [3, 1, 0], [5, 0, 1]]


def test_reconstruct_examples():
    F = PrimeField(7)
    assert reconstruct(_fact(F, [2, 0, 1], np.zeros((3, 0)), [])).tolist() == [[0] * 3] * 3
    assert reconstruct(_fact(F, [0, 1], [[1, 0], [0, 1]], [AntiDiag(1)])).tolist() == [[0, 1], [1, 0]]
    assert reconstruct(_fact(F, [0, 1], [[1, 0], [4, 1]], [AntiDiag(1)])).tolist() == [[0, 1], [1, 1]]


@given(st.sampled_from([2, 7, 2**61 - 1]), st.integers(1, 9), st.integers(0, 2**31))
def test_reconstruct_matches_dense_oracle(p, N, seed):
    F = PrimeField(p)
    rng = np.random.default_rng(seed)
    D = _random_blockdiag(F, rng, N)
    while D.order > N:
        D = BlockDiag(D.blocks[:-1])
    r = D.order
    L = F.random((N, r), rng)
    L[:r, :r] = np.tril(L[:r, :r], -1)
    L[np.arange(r), np.arange(r)] = 1
    img = rng.permutation(N)
    f = Factorization(Permutation(img), L, D, F)
    f.check_shape()
    Pd = Permutation(img).to_dense()
    expect = mm(mm(mm(mm(Pd, expand_L(f), p), np.pad(blockdiag_to_dense(D, F), ((0, N - r), (0, N - r))), p),
                   expand_L(f).T, p), Pd.T, p)
    out = reconstruct(f)
    assert same(out, expect)
    assert same(out, out.T)
