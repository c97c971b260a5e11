"""Select the kernel backend.

Numba is used when importable unless ``GENLOGISTIC_DISABLE_NUMBA`` is set to a
truthy value, in which case the pure-numpy kernels are used everywhere.
"""
import os
from typing import Any, Callable

_FLAG = os.environ.get("GENLOGISTIC_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _FLAG not in ("", "0", "false", "no")

try:
    from numba import njit as _numba_njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def _numba_njit(*args: Any, **kwargs: Any) -> Callable:
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


USE_NUMBA = HAVE_NUMBA and not DISABLED_BY_ENV


def njit(func: Callable) -> Callable:
    """``numba.njit(cache=True)`` when numba is installed, identity otherwise."""
    return _numba_njit(cache=True, nogil=True)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
