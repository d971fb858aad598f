"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``SUPERCRYSTAL_PURE=1`` to force the fallback.
"""

import os

from . import _kernel_py

if os.environ.get("SUPERCRYSTAL_PURE", "") not in ("", "0"):
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

fold = _impl.fold
act = _impl.act
string = _impl.string
moves = _impl.moves
is_highest = _impl.is_highest
signature = _impl.signature

__all__ = ["BACKEND", "fold", "act", "string", "moves", "is_highest", "signature"]
