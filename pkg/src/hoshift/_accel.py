"""Numba switch.

Set ``HOSHIFT_DISABLE_NUMBA=1`` before import to run every kernel as plain
Python/numpy. Useful for debugging and for the parity tests.
"""

import os

NUMBA_DISABLED = os.environ.get("HOSHIFT_DISABLE_NUMBA", "").lower() in ("1", "true", "yes")

try:
    if NUMBA_DISABLED:
        raise ImportError
    import numba

    HAS_NUMBA = True
except ImportError:
    numba = None
    HAS_NUMBA = False


def maybe_njit(*args, **kwargs):
    """``numba.njit`` when available and enabled, identity otherwise."""
    if args and callable(args[0]) and len(args) == 1 and not kwargs:
        fn = args[0]
        if HAS_NUMBA:
            return numba.njit(cache=True)(fn)
        return fn

    def deco(fn):
        if HAS_NUMBA:
            kwargs.setdefault("cache", True)
            return numba.njit(**kwargs)(fn)
        return fn

    return deco


def python_version(fn):
    """Return the uncompiled function behind a (possibly) jitted kernel."""
    return getattr(fn, "py_func", fn)
