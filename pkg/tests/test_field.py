import pytest
from hypothesis import given, strategies as st

from rpm_ldlt.errors import CharTwoDivision, ZeroInverse
from rpm_ldlt.field import COUNTER_MAX, PrimeField, is_prime


def test_add_examples():
    assert PrimeField(7).add(3, 5) == 1
    assert PrimeField(2).add(1, 1) == 0
    assert PrimeField(7).add(0, 4) == 4


def test_mul_sub_neg_examples():
    F = PrimeField(7)
    assert F.mul(3, 5) == 1
    assert F.sub(2, 5) == 4
    assert F.neg(3) == 4


def test_inv_examples():
    F = PrimeField(7)
    assert F.inv(2) == 4
    assert F.inv(1) == 1
    with pytest.raises(ZeroInverse):
        F.inv(0)


def test_halve_examples():
    F = PrimeField(7)
    assert F.halve(1) == 4
    assert F.halve(6) == 3
    with pytest.raises(CharTwoDivision):
        PrimeField(2).halve(1)


def test_is_char_two():
    assert PrimeField(2).is_char_two()
    assert not PrimeField(7).is_char_two()
    assert not PrimeField(8388593).is_char_two()


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 561, 2**62, 2**62 + 1])
def test_rejects_bad_modulus(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)


def test_is_prime_against_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))
    assert all(is_prime(n) == trial(n) for n in range(2000))
    assert is_prime(8388593) and is_prime(2**61 - 1) and not is_prime(2**61 + 1)


fields = st.sampled_from([2, 3, 7, 8388593, 2**61 - 1]).map(PrimeField)


@given(fields, st.integers(0, 2**62), st.integers(0, 2**62), st.integers(0, 2**62))
def test_field_axioms(F, a, b, c):
    a, b, c = F(a), F(b), F(c)
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1
    if not F.is_char_two():
        h = F.halve(a)
        assert F.add(h, h) == a
    for v in (F.add(a, b), F.sub(a, b), F.mul(a, b), F.neg(a)):
        assert 0 <= v < F.p


@given(st.integers(0, 200))
def test_counter_counts_exactly(k):
    F = PrimeField(7)
    for i in range(k):
        F.mul(i, 3)
    assert F.mul_count == k
    assert F.reset_counter() == k and F.mul_count == 0


def test_counter_saturates():
    F = PrimeField(7)
    F.count(COUNTER_MAX - 1)
    F.mul(2, 3)
    F.mul(2, 3)
    assert F.mul_count == COUNTER_MAX


def test_dtype_switch():
    import numpy as np
    assert PrimeField(8388593).dtype is np.int64
    assert PrimeField(2**61 - 1).dtype is object
    A = PrimeField(7).array([[-1, 8], [14, 3]])
    assert A.tolist() == [[6, 1], [0, 3]]
