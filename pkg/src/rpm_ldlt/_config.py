"""Backend selection for the hot loops.

``RPM_LDLT_BACKEND=numpy`` forces the pure-numpy path; anything else (or the
variable being unset) uses the numba-compiled kernels when numba imports.
Arrays of ``object`` dtype (moduli >= 2**31) always take the numpy path.
"""

import os

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_requested = os.environ.get("RPM_LDLT_BACKEND", "numba").strip().lower()
BACKEND = "numba" if (_requested != "numpy" and HAVE_NUMBA) else "numpy"


def set_backend(name: str) -> str:
    """Switch backend at runtime; returns the previous one."""
    global BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    old, BACKEND = BACKEND, name
    return old


def get_backend() -> str:
    return BACKEND
