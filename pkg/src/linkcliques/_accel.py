"""Optional numba acceleration.

Set ``LINKCLIQUES_NUMBA=0`` to force the pure-numpy kernels even when numba
is importable.
"""

import os


def _noop_jit(*args, **kwargs):
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


def _have_numba():
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


HAVE_NUMBA = _have_numba()
USE_NUMBA = HAVE_NUMBA and os.environ.get("LINKCLIQUES_NUMBA", "1").strip().lower() not in (
    "0",
    "false",
    "no",
    "off",
)

if HAVE_NUMBA:
    from numba import njit
else:
    njit = _noop_jit
