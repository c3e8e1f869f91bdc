"""Kernel backend selection.

The compiled extension is used when it imports and ``SSQ_PURE_PYTHON`` is
unset; masks wider than 64 bits always go to the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("SSQ_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _pick(name: str, backend: str | None):
    if backend == "python" or (backend is None and _compiled is None):
        return getattr(_kernels_py, name)
    if _compiled is None:
        raise RuntimeError("compiled kernels are not available")
    return getattr(_compiled, name)


def exact_cover(masks, full, start=(), backend: str | None = None):
    fn = _pick("exact_cover", backend)
    try:
        return fn(masks, full, start)
    except OverflowError:
        return _kernels_py.exact_cover(masks, full, start)


def max_disjoint_family(masks, block_size, backend: str | None = None):
    fn = _pick("max_disjoint_family", backend)
    try:
        return fn(masks, block_size)
    except OverflowError:
        return _kernels_py.max_disjoint_family(masks, block_size)


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])
