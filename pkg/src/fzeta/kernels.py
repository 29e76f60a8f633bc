"""Backend selection for the hot kernels.

The compiled Cython module is used when it imports; otherwise the pure-Python
fallback is loaded.  Setting ``FZETA_PURE_PYTHON=1`` forces the fallback.
"""

import importlib
import os

_FORCE_PURE = os.environ.get("FZETA_PURE_PYTHON", "").strip() not in ("", "0")


def load_backend(name):
    """Import a specific backend by name: ``"cython"`` or ``"python"``."""
    if name == "cython":
        return importlib.import_module("fzeta._ckernels")
    if name == "python":
        return importlib.import_module("fzeta._pykernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    names = ["python"]
    try:
        load_backend("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


if _FORCE_PURE:
    _impl = load_backend("python")
else:
    try:
        _impl = load_backend("cython")
    except ImportError:
        _impl = load_backend("python")

BACKEND = _impl.NAME

poly_mul = _impl.poly_mul
poly_divrem_unit = _impl.poly_divrem_unit
poly_horner = _impl.poly_horner
poly_taylor_shift = _impl.poly_taylor_shift
count_invertible = _impl.count_invertible
count_mateq = _impl.count_mateq
count_rref = _impl.count_rref
count_projective = _impl.count_projective
