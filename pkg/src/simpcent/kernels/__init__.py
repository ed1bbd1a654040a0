"""Numerical kernel dispatch.

Two interchangeable backends exist: :mod:`simpcent.kernels.jit` (numba) and
:mod:`simpcent.kernels.npy` (pure numpy).  The environment variable
``SIMPCENT_BACKEND`` picks one at first use: ``numba``, ``numpy`` or ``auto``
(the default: numba when importable, numpy otherwise).  Tests and benchmarks
may switch at runtime via :func:`set_backend`.
"""

from __future__ import annotations

import os

from ..errors import ArgumentError
from . import npy

_active = None
_active_name = None


def set_backend(name: str | None) -> str:
    """Select the kernel backend; returns the name actually in effect."""
    global _active, _active_name
    name = (name or "auto").lower()
    if name == "numpy":
        _active, _active_name = npy, "numpy"
    elif name == "numba":
        from . import jit

        _active, _active_name = jit, "numba"
    elif name == "auto":
        try:
            from . import jit

            _active, _active_name = jit, "numba"
        except ImportError:
            _active, _active_name = npy, "numpy"
    else:
        raise ArgumentError(
            f"unknown backend {name!r}; expected numba, numpy or auto"
        )
    return _active_name


def get():
    """The active kernel module (selects one on first call)."""
    if _active is None:
        set_backend(os.environ.get("SIMPCENT_BACKEND", "auto"))
    return _active


def backend_name() -> str:
    get()
    return _active_name
