"""Kernel selection.

The compiled extension is used when it imports; setting ``WEILJET_PURE=1``
forces the pure-Python kernel.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os

from . import _pykernel

if os.environ.get("WEILJET_PURE", "") not in ("", "0"):
    _impl = _pykernel
    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernel
        BACKEND = "python"

mono_mul = _impl.mono_mul
mono_divides = _impl.mono_divides
in_ideal = _impl.in_ideal
mul_terms = _impl.mul_terms
add_terms = _impl.add_terms
reduce_terms = _impl.reduce_terms

__all__ = [
    "BACKEND",
    "mono_mul",
    "mono_divides",
    "in_ideal",
    "mul_terms",
    "add_terms",
    "reduce_terms",
]
