"""Prime fields Z/pZ with a multiplication counter.

Scalars are plain Python ints held as canonical residues in ``[0, p)``.
Matrices over the field are numpy arrays: ``int64`` when ``p < 2**31`` (so a
single product fits in a signed 64-bit word), ``object`` holding Python ints
otherwise.
"""

from __future__ import annotations

import numpy as np

from .errors import CharTwoDivision, ZeroInverse

#: largest modulus handled with int64 storage
INT64_MAX_P = 2**31
MAX_P = 2**62
COUNTER_MAX = 2**64 - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field Z/pZ.

    ``mul_count`` accumulates every field multiplication performed through
    this handle, whether by the scalar methods below or by the matrix
    kernels (which report their exact classic-algorithm counts through
    :meth:`count`).
    """

    __slots__ = ("p", "mul_count", "_inv2")

    def __init__(self, p: int):
        p = int(p)
        if not 2 <= p < MAX_P:
            raise ValueError(f"modulus {p} outside [2, 2**62)")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.mul_count = 0
        self._inv2 = None if p == 2 else pow(2, -1, p)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    # -- instrumentation ---------------------------------------------------
    def count(self, k: int) -> None:
        self.mul_count = min(self.mul_count + int(k), COUNTER_MAX)

    def reset_counter(self) -> int:
        old, self.mul_count = self.mul_count, 0
        return old

    # -- scalars -----------------------------------------------------------
    def __call__(self, a) -> int:
        return int(a) % self.p

    def is_char_two(self) -> bool:
        return self.p == 2

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        self.count(1)
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroInverse("0 has no inverse")
        return pow(int(a), -1, self.p)

    def halve(self, a: int) -> int:
        if self._inv2 is None:
            raise CharTwoDivision("division by 2 in characteristic 2")
        return self.mul(a, self._inv2)

    # -- arrays ------------------------------------------------------------
    @property
    def dtype(self):
        return np.int64 if self.p < INT64_MAX_P else object

    def array(self, data) -> np.ndarray:
        """Reduce ``data`` modulo p into this field's storage dtype."""
        if self.dtype is object:
            a = np.array(data, dtype=object)
            return np.vectorize(lambda v: int(v) % self.p, otypes=[object])(a) if a.size else a
        a = np.asarray(data)
        if a.dtype == object:
            a = np.vectorize(lambda v: int(v) % self.p, otypes=[np.int64])(a) if a.size else a.astype(np.int64)
            return a
        return np.mod(a.astype(np.int64, copy=False), self.p)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        e = np.zeros((n, n), dtype=self.dtype)
        e[np.arange(n), np.arange(n)] = 1
        return e

    def random(self, shape, rng: np.random.Generator, nonzero: bool = False) -> np.ndarray:
        lo = 1 if nonzero else 0
        if self.dtype is object:
            flat = [int(rng.integers(lo, self.p)) for _ in range(int(np.prod(shape)))]
            return np.array(flat, dtype=object).reshape(shape)
        return rng.integers(lo, self.p, size=shape, dtype=np.int64)
