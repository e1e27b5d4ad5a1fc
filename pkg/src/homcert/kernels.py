"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` twin. Setting ``HOMCERT_PURE_PYTHON=1`` forces the
fallback (used by the benchmark and the backend-agreement tests).
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("HOMCERT_PURE_PYTHON") == "1":
        raise ImportError("pure-python backend requested")
    from . import _ckernels as _impl
except ImportError:
    _impl = _pykernels

BACKEND: str = _impl.BACKEND

enumerate_profile = _impl.enumerate_profile
dense_rank = _impl.dense_rank
dense_solve = _impl.dense_solve
sparse_reduce = _impl.sparse_reduce


def compiled_available() -> bool:
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True


def backend_module(name: str):
    """Return the kernel module for ``"python"`` or ``"cython"``."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
