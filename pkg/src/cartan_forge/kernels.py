"""Kernel backend selection.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used. Setting ``CARTAN_FORGE_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _pykernels

if os.environ.get("CARTAN_FORGE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

ONE = _pykernels.ONE
ZERO = _pykernels.ZERO

mono_mul = _impl.mono_mul
poly_iadd = _impl.poly_iadd
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_scale = _impl.poly_scale
poly_mul = _impl.poly_mul
poly_pow = _impl.poly_pow
poly_partial = _impl.poly_partial
poly_total_derivative = _impl.poly_total_derivative
poly_vars = _impl.poly_vars
poly_substitute = _impl.poly_substitute
basis_normalize = _impl.basis_normalize
basis_merge = _impl.basis_merge
form_iadd = _impl.form_iadd
form_wedge = _impl.form_wedge

__all__ = [
    "BACKEND", "ONE", "ZERO", "mono_mul", "poly_iadd", "poly_add", "poly_sub",
    "poly_scale", "poly_mul", "poly_pow", "poly_partial", "poly_total_derivative",
    "poly_vars", "poly_substitute", "basis_normalize", "basis_merge", "form_iadd",
    "form_wedge",
]
