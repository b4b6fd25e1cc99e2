"""Kernel backend selection.

The compiled extension is used when it imports; setting
``HALLGROUPS_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

from . import _kernels_py

_BACKENDS = {"python": _kernels_py}

try:
    from . import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None
else:
    _BACKENDS["cython"] = _kernels_c

if _kernels_c is not None and os.environ.get("HALLGROUPS_PURE_PYTHON") != "1":
    BACKEND = "cython"
else:
    BACKEND = "python"

_impl = _BACKENDS[BACKEND]


def available():
    return sorted(_BACKENDS)


def use_backend(name: str) -> str:
    """Switch the process-wide backend; returns the previous one."""
    global BACKEND, _impl
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable (have {available()})")
    prev = BACKEND
    BACKEND, _impl = name, _BACKENDS[name]
    return prev


def products(*args):
    return _impl.products(*args)


def closure(*args):
    return _impl.closure(*args)
