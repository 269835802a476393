"""Shared fixtures and independent reference arithmetic for the tests.

The helpers here use Python-int object arrays and plain loops, never the
package kernels, so they can serve as oracles.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from rpm_ldlt import _config

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large,
                           HealthCheck.function_scoped_fixture])
settings.load_profile("default")

PRIMES = (2, 3, 7, 8388593)


def obj(A):
    return np.array([[int(v) for v in row] for row in np.asarray(A)], dtype=object).reshape(np.shape(A))


def mm(A, B, p):
    """Dense product mod p by Python big-int arithmetic."""
    A, B = obj(A), obj(B)
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=object)
    return (A @ B) % p


def same(A, B) -> bool:
    A, B = np.asarray(A), np.asarray(B)
    return A.shape == B.shape and all(int(a) == int(b) for a, b in zip(A.ravel(), B.ravel()))


def sym_random(F, n, r, rng, sparse=0.0):
    """Symmetric X S X^T with X n x r, optionally with many zeros in X."""
    X = F.random((n, r), rng)
    if sparse:
        X[rng.random((n, r)) < sparse] = 0
    S = F.random((r, r), rng)
    S = (S + S.T) % F.p
    return F.array(mm(mm(X, S, F.p), X.T, F.p))


@pytest.fixture(params=["numba", "numpy"])
def backend_name(request):
    old = _config.get_backend()
    _config.set_backend(request.param)
    yield request.param
    _config.set_backend(old)
