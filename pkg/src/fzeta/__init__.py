"""Exact checks of F_1 and F_zeta structures on counting polynomials and
Grothendieck classes, a truncated Habiro-ring engine, Tate-root classes and
brute-force finite-field oracles."""

import sys

__version__ = "0.1.0"

# sign-table values reach tens of thousands of digits and are serialized as decimals
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

from .exactpoly import IntPoly, LaurentPoly, RootOfUnity, CyclotomicInt  # noqa: E402
from .grothendieck import GrothClass, Verdict, L, T  # noqa: E402
from .habiro import HabiroElement  # noqa: E402
from .tateroot import TateRootClass  # noqa: E402

__all__ = [
    "CyclotomicInt", "GrothClass", "HabiroElement", "IntPoly", "L", "LaurentPoly",
    "RootOfUnity", "T", "TateRootClass", "Verdict", "__version__",
]
