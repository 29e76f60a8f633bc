"""Formal n-th roots of the Lefschetz class.

A :class:`TateRootClass` of root order n is a Laurent polynomial in t with
t^n = L, so the monomial t^k stands for L^(k/n).  Values with different root
orders are compared and combined at the lcm of the orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import IntPoly, LaurentPoly, format_terms
from .grothendieck import GrothClass, as_poly


class NoF1StructureError(ValueError):
    """Raised when a class has a negative Lefschetz-basis coefficient."""

    def __init__(self, k, coefficient):
        super().__init__(f"coefficient {coefficient} of L^{k} is negative; no F_1-structure")
        self.witness = {"k": k, "coefficient": coefficient}


class TateRootClass:
    __slots__ = ("root_order", "value")

    def __init__(self, root_order, value):
        if root_order < 1:
            raise ValueError("root order must be >= 1")
        object.__setattr__(self, "root_order", root_order)
        object.__setattr__(self, "value", LaurentPoly.coerce(value))

    def __setattr__(self, name, value):
        raise AttributeError("TateRootClass is immutable")

    @classmethod
    def from_class(cls, c):
        if isinstance(c, GrothClass):
            return cls(1, c.value)
        return cls(1, as_poly(c))

    def terms(self):
        """(exponent of L as a Fraction, coefficient) pairs."""
        return [(Fraction(k, self.root_order), c) for k, c in self.value.terms()]

    def at_order(self, order):
        """Same value written with a root order that is a multiple of ours."""
        if order % self.root_order:
            raise ValueError(f"root order {order} is not a multiple of {self.root_order}")
        f = order // self.root_order
        return TateRootClass(order, LaurentPoly.from_terms((k * f, c) for k, c in self.value.terms()))

    def normalized(self):
        """Smallest root order representing the same value."""
        g = self.root_order
        for k, _ in self.value.terms():
            g = math.gcd(g, k)
        if g <= 1:
            return self
        return TateRootClass(self.root_order // g,
                             LaurentPoly.from_terms((k // g, c) for k, c in self.value.terms()))

    def to_groth(self):
        norm = self.normalized()
        if norm.root_order != 1:
            raise ValueError("class has fractional powers of L")
        return GrothClass(norm.value)

    def _common(self, other):
        if not isinstance(other, TateRootClass):
            other = TateRootClass.from_class(other)
        order = math.lcm(self.root_order, other.root_order)
        return self.at_order(order), other.at_order(order), order

    def __add__(self, other):
        a, b, order = self._common(other)
        return TateRootClass(order, a.value + b.value)

    __radd__ = __add__

    def __neg__(self):
        return TateRootClass(self.root_order, -self.value)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return rational_power_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TateRootClass):
            try:
                other = TateRootClass.from_class(other)
            except TypeError:
                return NotImplemented
        a, b, _ = self._common(other)
        return a.value == b.value

    def __hash__(self):
        n = self.normalized()
        return hash((n.root_order, n.value))

    def __str__(self):
        parts = []
        for e, c in sorted(self.terms(), reverse=True):
            mono = "1" if e == 0 else f"L^({e})" if e.denominator != 1 else f"L^{e.numerator}"
            if mono == "1":
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"root_order": self.root_order, "value": format_terms(self.value.terms())}

    def __repr__(self):
        return f"TateRootClass({self.root_order}, {format_terms(self.value.terms())!r})"


def tate_root(c, n):
    """sum_k b_k L^k  ->  sum_k b_k L^(k/n); needs every b_k >= 0."""
    if n < 1:
        raise ValueError("root order must be >= 1")
    p = as_poly(c)
    for k, b in p.terms():
        if b < 0:
            raise NoF1StructureError(k, b)
    return TateRootClass(n, p)


def is_integral(m):
    """Whether m lies in Z[L, 1/L]; returns (flag, first fractional exponent or None)."""
    for k, _ in m.value.terms():
        if k % m.root_order:
            return False, k
    return True, None


@dataclass(frozen=True)
class OrbitClass:
    """Residue in Z[t]/(t^m - 1)."""

    modulus_order: int
    value: IntPoly

    def __post_init__(self):
        if self.value.degree >= self.modulus_order:
            raise ValueError("orbit residue must have degree < modulus order")

    def _check(self, other):
        if other.modulus_order != self.modulus_order:
            raise ValueError("orbit classes with different moduli")

    def __add__(self, other):
        self._check(other)
        return OrbitClass(self.modulus_order, self.value + other.value)

    def __mul__(self, other):
        self._check(other)
        return OrbitClass(self.modulus_order, (self.value * other.value).fold(self.modulus_order))

    def at_one(self):
        return sum(self.value.coeffs)

    def to_json(self):
        return {"modulus_order": self.modulus_order,
                "value": format_terms(self.value.terms())}


def orbit_reduce(m, period):
    """Reduce mod t^period - 1 (L^period - 1 for plain classes); t^-1 = t^(period-1)."""
    if period < 1:
        raise ValueError("period must be >= 1")
    if not isinstance(m, TateRootClass):
        m = TateRootClass.from_class(m)
    out = [0] * period
    for k, c in m.value.terms():
        out[k % period] += c
    return OrbitClass(period, IntPoly(out))


def rational_power_mul(a, b):
    a, b, order = a._common(b)
    return TateRootClass(order, a.value * b.value)


def rescale(a, r):
    """f(L) -> f(L^r) for a positive rational r."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("rescale needs a positive rational")
    if not isinstance(a, TateRootClass):
        a = TateRootClass.from_class(a)
    order = a.root_order * r.denominator
    return TateRootClass(order, LaurentPoly.from_terms(
        (k * r.numerator, c) for k, c in a.value.terms())).normalized()
