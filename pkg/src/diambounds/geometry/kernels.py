"""Kernel selection: compiled core when importable, pure Python otherwise.

Set ``DIAMBOUNDS_PURE_PYTHON=1`` to force the fallback. Each compiled call
that overflows its fixed-width arithmetic is rerun on the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

_native = None
if os.environ.get("DIAMBOUNDS_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels as _native
    except ImportError:
        _native = None

BACKEND = _native.BACKEND if _native is not None else _pykernels.BACKEND


def _dispatch(name):
    fallback = getattr(_pykernels, name)
    if _native is None:
        return fallback
    fast = getattr(_native, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return fallback(*args)

    call.__name__ = name
    call.__doc__ = fallback.__doc__
    return call


rank = _dispatch("rank")
mask_rank = _dispatch("mask_rank")
solve_vertices = _dispatch("solve_vertices")
has_recession_ray = _dispatch("has_recession_ray")
adjacent_pairs = _dispatch("adjacent_pairs")
graph_diameter = _dispatch("graph_diameter")
