"""Kernel backend selection.

Imports the Cython extension ``sparseproj._speedups`` when it has been built,
otherwise falls back to the pure-Python twin.  ``SPARSEPROJ_PURE=1`` forces
the fallback (used by the parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SPARSEPROJ_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = _impl.IMPLEMENTATION
poly_mul = _impl.poly_mul
poly_addmul = _impl.poly_addmul
poly_mul_trunc = _impl.poly_mul_trunc
series_mul = _impl.series_mul
