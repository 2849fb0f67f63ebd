"""Kernel backend selection.

The compiled Cython core is preferred; the pure-Python twin is used when the
extension is unavailable or when ``SPINTRIMER_PURE_PYTHON=1`` is set.  Both
backends implement the identical cyclic-Jacobi algorithm, so results agree to
rounding.
"""

from __future__ import annotations

import os

if os.environ.get("SPINTRIMER_PURE_PYTHON", "").strip() not in ("", "0"):
    from . import _jacobi_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _jacobi_py as _impl

        BACKEND = "python"

jacobi_eigh = _impl.jacobi_eigh

__all__ = ["BACKEND", "jacobi_eigh"]
