"""Grothendieck classes in Z[L, 1/L], torus-basis conversion and checkers for
the F_1 / F_zeta structure conditions on classes and counting polynomials.

Geometric conditions (cell decompositions, torifications) are represented by
certificates: multisets of cell or torus dimensions whose class reconstruction
is checked exactly.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from dataclasses import dataclass, field

from .exactpoly import IntPoly, LaurentPoly, divrem_unit, eval_int, format_poly, format_terms


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDETERMINED = "undetermined"


class GrothClass:
    """A class sum_k b_k L^k (k may be negative), L = [A^1]."""

    __slots__ = ("value",)

    def __init__(self, value):
        object.__setattr__(self, "value", LaurentPoly.coerce(value))

    def __setattr__(self, name, value):
        raise AttributeError("GrothClass is immutable")

    @classmethod
    def from_terms(cls, terms):
        return cls(LaurentPoly.from_terms(terms))

    @property
    def poly(self):
        """The class as an IntPoly in L; raises for genuine Laurent classes."""
        if not self.value.is_polynomial():
            raise ValueError(f"class {self} has negative powers of L")
        return self.value.to_intpoly()

    def terms(self):
        return self.value.terms()

    def count(self, q):
        """Counting function N(q); a Fraction when negative powers of L occur."""
        return sum(c * Fraction(q) ** k if k < 0 else c * q**k for k, c in self.terms())

    def __add__(self, other):
        return GrothClass(self.value + _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return GrothClass(self.value - _lift(other))

    def __rsub__(self, other):
        return GrothClass(_lift(other) - self.value)

    def __neg__(self):
        return GrothClass(-self.value)

    def __mul__(self, other):
        return GrothClass(self.value * _lift(other))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = GrothClass(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            return self.value == _lift(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(("GrothClass", self.value))

    def __str__(self):
        return self.value.to_str("L")

    def __repr__(self):
        return f"GrothClass({format_terms(self.terms())!r})"


def _lift(value):
    if isinstance(value, GrothClass):
        return value.value
    return LaurentPoly.coerce(value)


def as_poly(c):
    """Accept an IntPoly or a polynomial GrothClass and return the IntPoly."""
    if isinstance(c, GrothClass):
        return c.poly
    if isinstance(c, IntPoly):
        return c
    if isinstance(c, int):
        return IntPoly.constant(c)
    raise TypeError(f"expected a class or polynomial, got {type(c).__name__}")


L = GrothClass(IntPoly((0, 1)))
T = L - 1


@dataclass(frozen=True)
class TorusDecomposition:
    """[X] = sum_k a_k T^k with every a_k >= 0."""

    counts: dict

    def __post_init__(self):
        clean = {}
        for k, a in self.counts.items():
            if k < 0:
                raise ValueError(f"torus dimension {k} is negative")
            if a < 0:
                raise ValueError(f"torus multiplicity a_{k} = {a} is negative")
            if a:
                clean[k] = a
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    def __hash__(self):
        return hash(tuple(self.counts.items()))

    def to_class(self):
        return from_torus_basis(self.counts)

    def evaluate(self, x):
        """sum_k a_k (x - 1)^k, the point count read off the certificate."""
        return sum(a * (x - 1) ** k for k, a in self.counts.items())

    def euler_characteristic(self):
        return self.counts.get(0, 0)

    def to_json(self):
        return {str(k): str(a) for k, a in self.counts.items()}


@dataclass(frozen=True)
class CellDecomposition:
    """X = disjoint union of affine cells A^(k_j)."""

    cells: tuple

    def __post_init__(self):
        cells = tuple(sorted(self.cells))
        if any(k < 0 for k in cells):
            raise ValueError("cell dimensions must be non-negative")
        object.__setattr__(self, "cells", cells)

    def to_class(self):
        return GrothClass.from_terms((k, 1) for k in self.cells)

    def to_json(self):
        return list(self.cells)


@dataclass
class ConditionReport:
    condition: str
    verdict: Verdict
    witness: dict | None = None
    certificate: object = None
    bound: int | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict is Verdict.FAILS and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    @property
    def holds(self):
        return self.verdict is Verdict.HOLDS

    def to_json(self):
        out = {"condition": self.condition, "verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.certificate is not None:
            cert = self.certificate
            out["certificate"] = cert.to_json() if hasattr(cert, "to_json") else _jsonable(cert)
        if self.bound is not None:
            out["bound"] = str(self.bound)
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


def _jsonable(obj):
    """Big integers become decimal strings; polynomials their text format."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str | float):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, IntPoly):
        return format_poly(obj)
    if isinstance(obj, GrothClass | LaurentPoly):
        return format_terms(obj.terms())
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list | tuple):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)


# basis conversion

def to_torus_basis(c):
    """Signed coefficients {k: c_k} with [X] = sum_k c_k T^k (zeros omitted)."""
    if isinstance(c, GrothClass) and not c.value.is_polynomial():
        raise ValueError("torus-basis expansion needs a class without negative powers of L")
    p = as_poly(c)
    return {k: v for k, v in p.taylor_shift(1).terms()}


def from_torus_basis(coeffs):
    """sum_k c_k (L - 1)^k as a class."""
    if not coeffs:
        return GrothClass(0)
    p = IntPoly.from_terms(coeffs.items())
    return GrothClass(p.taylor_shift(-1))


def _first_negative(coeffs):
    for k in sorted(coeffs):
        if coeffs[k] < 0:
            return k, coeffs[k]
    return None


def check_motivic_f1(c):
    """Torus-basis positivity; a_0 is reported as the Euler characteristic."""
    coeffs = to_torus_basis(c)
    bad = _first_negative(coeffs)
    details = {"torus_basis": coeffs, "euler_characteristic": coeffs.get(0, 0)}
    if bad:
        return ConditionReport("motivic-f1", Verdict.FAILS,
                               witness={"k": bad[0], "coefficient": bad[1]}, details=details)
    return ConditionReport("motivic-f1", Verdict.HOLDS,
                           certificate=TorusDecomposition(coeffs), details=details)


def check_counting_f1(poly):
    """Polynomial counting function non-negative at every integer x >= 1."""
    rep = check_interp_positivity(poly)
    return ConditionReport("counting-f1", rep.verdict, witness=rep.witness,
                           certificate=rep.certificate, bound=rep.bound,
                           details={k: v for k, v in rep.details.items()
                                    if k != "negative_nonpositive"})


def check_eval_fzeta(c, n):
    """Every nonzero coefficient sits at an exponent divisible by n and is positive."""
    if n < 1:
        raise ValueError("root-of-unity order must be >= 1")
    p = as_poly(c)
    for k, b in p.terms():
        if k % n or b <= 0:
            reason = "exponent not divisible" if k % n else "non-positive coefficient"
            return ConditionReport("eval-fzeta", Verdict.FAILS,
                                   witness={"k": k, "coefficient": b, "reason": reason},
                                   details={"n": n})
    cells = CellDecomposition(tuple(k for k, b in p.terms() for _ in range(b)))
    return ConditionReport("eval-fzeta", Verdict.HOLDS, certificate=cells, details={"n": n})


def support_gcd(c):
    """gcd of the exponents carrying nonzero coefficients (0 for constants)."""
    g = 0
    for k, _ in as_poly(c).terms():
        g = math.gcd(g, k)
    return g


def check_cell_certificate(c, cells, n=1):
    """Reconstruct [X] from a cell decomposition with n | k_j for every cell."""
    cells = CellDecomposition(tuple(cells))
    bad = [k for k in cells.cells if k % n]
    if cells.to_class() != GrothClass(as_poly(c)):
        raise ValueError("cell decomposition does not reconstruct the class")
    if bad:
        return ConditionReport("cell-decomposition", Verdict.FAILS,
                               witness={"cell_dimension": bad[0]}, details={"n": n})
    return ConditionReport("cell-decomposition", Verdict.HOLDS, certificate=cells,
                           details={"n": n})


def cauchy_bound(poly):
    """1 + ceil(max_{k<d} |b_k| / |b_d|); no real root lies at or beyond it in absolute value."""
    coeffs = poly.coeffs
    lead = abs(coeffs[-1])
    m = max((abs(c) for c in coeffs[:-1]), default=0)
    return 1 + -(-m // lead)


def check_interp_positivity(poly, n=None):
    """Non-negativity of poly at every integer x >= 1, plus the negative values
    among x = 0, -1, ..., -B; with ``n`` also requires poly(1 - n) >= 0."""
    poly = as_poly(poly)
    details = {}
    if poly.is_zero():
        verdict = Verdict.HOLDS
        return ConditionReport("interp-positivity", verdict, details={"negative_nonpositive": []})
    bound = cauchy_bound(poly)
    coeffs = to_torus_basis(poly)
    witness = None
    certificate = None
    if _first_negative(coeffs) is None:
        certificate = TorusDecomposition(coeffs)
        details["positive_side"] = "torus basis non-negative"
    elif poly.leading < 0:
        x = next(x for x in range(1, bound + 2) if eval_int(poly, x) < 0)
        witness = {"x": [x], "value": eval_int(poly, x)}
        details["positive_side"] = "negative leading coefficient"
    else:
        neg = [x for x in range(1, bound + 1) if eval_int(poly, x) < 0]
        details["positive_side"] = f"exhaustive search 1..{bound}"
        if neg:
            witness = {"x": neg}
    negatives = [x for x in range(0, -bound - 1, -1) if eval_int(poly, x) < 0]
    details["negative_nonpositive"] = negatives
    details["sign_below_bound"] = 1 if (poly.leading > 0) == (poly.degree % 2 == 0) else -1
    if witness is None and n is not None:
        v = eval_int(poly, 1 - n)
        details["n"] = n
        details["value_at_1_minus_n"] = v
        if v < 0:
            witness = {"x": [1 - n], "value": v}
    verdict = Verdict.FAILS if witness else Verdict.HOLDS
    return ConditionReport("interp-positivity", verdict, witness=witness,
                           certificate=certificate, bound=bound, details=details)


def check_partial_eval(poly, n, split=None):
    """N(q) = sum b_k q^(nk) + (q^n - 1) P(q), b_k >= 0, P >= 0 on positive integers.

    ``split`` is an optional (b_part, P) pair.  Without it, the b-part is taken
    to be every monomial with exponent divisible by n and positive coefficient;
    if the remainder is not divisible by q^n - 1 the verdict is undetermined,
    since some other split may exist.
    """
    if n < 1:
        raise ValueError("root-of-unity order must be >= 1")
    poly = as_poly(poly)
    qn1 = IntPoly.monomial(n) - 1
    if split is not None:
        b_part, p_part = (as_poly(s) for s in split)
        if b_part + qn1 * p_part != poly:
            raise ValueError("split does not reconstruct the polynomial")
        source = "given"
    else:
        b_part = IntPoly.from_terms((k, c) for k, c in poly.terms() if k % n == 0 and c > 0)
        p_part, rem = divrem_unit(poly - b_part, qn1)
        if rem:
            return ConditionReport("partial-eval", Verdict.UNDETERMINED,
                                   details={"n": n, "heuristic_remainder": rem})
        source = "heuristic"
    details = {"n": n, "split": source, "b_part": b_part, "P": p_part}
    bad_b = next(((k, c) for k, c in b_part.terms() if k % n or c < 0), None)
    if bad_b:
        return ConditionReport("partial-eval", Verdict.FAILS,
                               witness={"b_exponent": bad_b[0], "coefficient": bad_b[1]},
                               details=details)
    sub = check_interp_positivity(p_part)
    details["P_report"] = sub.to_json()
    if not sub.holds:
        if split is None:
            return ConditionReport("partial-eval", Verdict.UNDETERMINED, details=details)
        return ConditionReport("partial-eval", Verdict.FAILS,
                               witness={"P_negative_at": sub.witness["x"]}, details=details)
    return ConditionReport("partial-eval", Verdict.HOLDS,
                           certificate={"b_part": b_part, "P": p_part}, details=details)


def dual_class(c):
    """L -> -L in the Lefschetz basis."""
    return GrothClass(as_poly(c).scale_var(-1))


def dual_class_from_torus(coeffs):
    """sum_k a_k (-1)^k (L + 1)^k from a torus expansion."""
    p = IntPoly.from_terms(coeffs.items()) if coeffs else IntPoly()
    return GrothClass(p.scale_var(-1).taylor_shift(1))


def check_dual_torification(c):
    """Torus positivity of [X] and of its L -> -L dual."""
    coeffs = to_torus_basis(c)
    bad = _first_negative(coeffs)
    if bad:
        return ConditionReport("dual-torification", Verdict.FAILS,
                               witness={"stage": "torification", "k": bad[0],
                                        "coefficient": bad[1]},
                               details={"torus_basis": coeffs})
    dual = dual_class(c)
    if dual != dual_class_from_torus(coeffs):
        raise AssertionError("dual class disagrees between the two substitution routes")
    dual_coeffs = to_torus_basis(dual)
    details = {"torus_basis": coeffs, "dual_class": dual, "dual_torus_basis": dual_coeffs}
    bad = _first_negative(dual_coeffs)
    if bad:
        return ConditionReport("dual-torification", Verdict.FAILS,
                               witness={"stage": "dual", "k": bad[0], "coefficient": bad[1]},
                               details=details)
    return ConditionReport("dual-torification", Verdict.HOLDS,
                           certificate={"torus": TorusDecomposition(coeffs),
                                        "dual": TorusDecomposition(dual_coeffs)},
                           details=details)


def torify_punctured_affine(k):
    """Torus certificate of A^k minus the origin, by peeling off A^(k-1) x G_m
    one dimension at a time."""
    if k < 1:
        raise ValueError("A^k minus a point needs k >= 1")
    counts = {1: 1}
    for _ in range(1, k):
        # A^(j+1) \ 0 = (A^j x G_m) u (A^j \ 0), and A^j itself is sum_i C(j,i) T^i
        j = max(counts)
        layer = {i + 1: math.comb(j, i) for i in range(j + 1)}
        for d, a in layer.items():
            counts[d] = counts.get(d, 0) + a
    dec = TorusDecomposition(counts)
    if dec.to_class() != L ** k - 1:
        raise AssertionError(f"torification of A^{k} minus a point does not reconstruct")
    return dec


def product_decomposition(d1, d2):
    out = {}
    for i, a in d1.counts.items():
        for j, b in d2.counts.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return TorusDecomposition(out)
