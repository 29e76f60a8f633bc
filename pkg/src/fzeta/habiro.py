"""Truncated Habiro ring Z[q]/((q)_N).

The ideal generator is (q)_N = (q-1)(q^2-1)...(q^N-1).  The other common
convention (1-q)(1-q^2)...(1-q^N) differs by the unit (-1)^N, so the quotient
rings agree; :meth:`HabiroNormalForm.in_one_minus_convention` converts normal
forms between the two.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .exactpoly import (
    ONE,
    Q,
    ZERO,
    IntPoly,
    RootOfUnity,
    divrem_unit,
    eval_int,
    eval_root,
    format_poly,
)
from .grothendieck import (
    ConditionReport,
    TorusDecomposition,
    Verdict,
    as_poly,
    to_torus_basis,
)

_poch_cache = {0: ONE}
_poch_lock = threading.Lock()


def pochhammer(n):
    """(q)_n = (q-1)(q^2-1)...(q^n-1), with (q)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer index must be >= 0")
    hit = _poch_cache.get(n)
    if hit is not None:
        return hit
    prev = pochhammer(n - 1)
    val = prev.shift(n) - prev
    with _poch_lock:
        return _poch_cache.setdefault(n, val)


def pochhammer_one_minus(n):
    """(1-q)(1-q^2)...(1-q^n)."""
    p = pochhammer(n)
    return -p if n % 2 else p


class LevelMismatch(ValueError):
    pass


class InsufficientLevel(ValueError):
    pass


class HabiroElement:
    """Element of Z[q]/((q)_N), stored as its remainder mod (q)_N."""

    __slots__ = ("level", "rep")

    def __init__(self, level, rep):
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("HabiroElement is immutable")

    def _match(self, other):
        if isinstance(other, int | IntPoly):
            return make(self.level, as_poly(other))
        if not isinstance(other, HabiroElement):
            return NotImplemented
        if other.level != self.level:
            raise LevelMismatch(f"levels {self.level} and {other.level} differ; project first")
        return other

    def __add__(self, other):
        return habiro_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return other
        return make(self.level, self.rep - other.rep)

    def __neg__(self):
        return make(self.level, -self.rep)

    def __mul__(self, other):
        return habiro_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HabiroElement):
            return NotImplemented
        return self.level == other.level and self.rep == other.rep

    def __hash__(self):
        return hash((self.level, self.rep))

    def is_zero(self):
        return self.rep.is_zero()

    def project(self, level):
        """Image in Z[q]/((q)_level) for level <= self.level."""
        if level > self.level:
            raise InsufficientLevel(f"cannot lift from level {self.level} to {level}")
        return make(level, self.rep)

    def to_json(self):
        return {"level": self.level, "rep": format_poly(self.rep)}

    def __repr__(self):
        return f"HabiroElement(level={self.level}, rep={format_poly(self.rep)!r})"


def make(level, p):
    if level < 1:
        raise ValueError("Habiro truncation level must be >= 1")
    p = as_poly(p)
    gen = pochhammer(level)
    if p.degree >= gen.degree:
        p = divrem_unit(p, gen)[1]
    return HabiroElement(level, p)


def habiro_add(a, b, project=False):
    a, b = _align(a, b, project)
    return make(a.level, a.rep + b.rep)


def habiro_mul(a, b, project=False):
    a, b = _align(a, b, project)
    return make(a.level, a.rep * b.rep)


def _align(a, b, project):
    if isinstance(b, int | IntPoly):
        return a, make(a.level, as_poly(b))
    if a.level == b.level:
        return a, b
    if not project:
        raise LevelMismatch(f"levels {a.level} and {b.level} differ; project first")
    low = min(a.level, b.level)
    return a.project(low), b.project(low)


@dataclass(frozen=True)
class HabiroNormalForm:
    """rep = sum_m a_m(q) (q)_m with deg a_m <= m; unique given the bounds."""

    coeff_polys: tuple

    def reconstruct(self):
        out = ZERO
        for m, a in enumerate(self.coeff_polys):
            out = out + a * pochhammer(m)
        return out

    def in_one_minus_convention(self):
        """Coefficients against (1-q)...(1-q^m) instead of (q-1)...(q^m-1)."""
        return tuple(-a if m % 2 else a for m, a in enumerate(self.coeff_polys))

    def to_json(self, convention="minus-one"):
        polys = (self.in_one_minus_convention() if convention == "one-minus"
                 else self.coeff_polys)
        return {"a": [format_poly(a) for a in polys], "convention": convention}


def normal_form(a):
    r = a.rep
    coeffs = [ZERO] * a.level
    for m in range(a.level - 1, -1, -1):
        quot, r = divrem_unit(r, pochhammer(m))
        if quot.degree > m:
            raise AssertionError("normal form coefficient exceeded its degree bound")
        coeffs[m] = quot
    if r:
        raise AssertionError("normal form left a nonzero remainder")
    return HabiroNormalForm(tuple(coeffs))


def ev_n(a, n):
    """Image in Z[q]/(q^n - 1), as a polynomial of degree < n."""
    if n < 1:
        raise ValueError("ev_n needs n >= 1")
    if n > a.level:
        raise InsufficientLevel(f"insufficient truncation level: ev_{n} needs level >= {n}, "
                                f"element has level {a.level}")
    return a.rep.fold(n)


def ev_zeta(a, z):
    if z.order > a.level:
        raise InsufficientLevel(f"insufficient truncation level: order {z.order} root needs "
                                f"level >= {z.order}, element has level {a.level}")
    return eval_root(a.rep, z)


def max_taylor_order(level, order):
    """Taylor coefficients at a root of this order fixed by a level-N truncation."""
    return level // order


def taylor_zeta(a, z, K):
    """Coefficients of rep(zeta + s) in s^0 .. s^(K-1), each in Z[zeta]."""
    top = max_taylor_order(a.level, z.order)
    if K > top:
        raise InsufficientLevel(f"K={K} Taylor coefficients at an order-{z.order} root need "
                                f"level >= {K * z.order}; level {a.level} fixes only {top}")
    return [eval_root(a.rep.hasse_derivative(j), z) for j in range(K)]


def frobenius(a, n):
    """q -> q^n; well defined since (q)_N divides (q^n)_N."""
    if n < 1:
        raise ValueError("frobenius needs n >= 1")
    return make(a.level, a.rep.substitute_power(n))


def lefschetz_inverse_sum(cutoff, convention="one-minus"):
    """sum_{m < cutoff} q^m P_m, with P_m = (1-q)...(1-q^m) or (q-1)...(q^m-1)."""
    out = ZERO
    for m in range(cutoff):
        p = pochhammer_one_minus(m) if convention == "one-minus" else pochhammer(m)
        out = out + p.shift(m)
    return out


def inverse_lefschetz(level):
    """Inverse of q at the given level.

    q * sum_{m<N} q^m (1-q)...(1-q^m) - 1 = -(1-q)...(1-q^N), which telescopes;
    the same sum with (q^m - 1) factors is not an inverse once N >= 2.
    """
    inv = make(level, lefschetz_inverse_sum(level))
    if not (make(level, Q) * inv - 1).is_zero():
        raise AssertionError(f"q * inverse_lefschetz({level}) is not 1")
    return inv


# ind-varieties X_N = union_m X_m x (A^m - 0) x ... x (A^1 - 0)

@dataclass(frozen=True)
class IndVarietySpec:
    """alpha_m = [X_m]; either a callable m -> IntPoly or an explicit list."""

    alpha: object
    name: str = ""

    def term(self, m):
        if callable(self.alpha):
            return as_poly(self.alpha(m))
        return as_poly(self.alpha[m]) if m < len(self.alpha) else ZERO

    def terms(self, n):
        return [self.term(m) for m in range(n)]

    def partial_sum(self, n):
        """sum_{m<n} alpha_m(q) (q)_m."""
        out = ZERO
        for m in range(n):
            out = out + self.term(m) * pochhammer(m)
        return out


def eval_point(n, convention="one-minus-n"):
    if convention == "one-minus-n":
        return 1 - n
    if convention == "minus-n":
        return -n
    raise ValueError(f"unknown evaluation-point convention {convention!r}")


def check_ind_f1(spec, N):
    certs = {}
    for m in range(N):
        coeffs = to_torus_basis(spec.term(m))
        bad = next(((k, c) for k, c in sorted(coeffs.items()) if c < 0), None)
        if bad:
            return ConditionReport("ind-f1", Verdict.FAILS,
                                   witness={"m": m, "k": bad[0], "coefficient": bad[1]},
                                   details={"torus_basis": coeffs})
        certs[m] = TorusDecomposition(coeffs)
    return ConditionReport("ind-f1", Verdict.HOLDS, certificate=certs, details={"N": N})


def check_ind_fzeta(spec, n, convention="one-minus-n"):
    """Sign of N_{X_n}(q) = sum_{m<n} alpha_m(q)(q)_m at the convention point."""
    if n < 1:
        raise ValueError("check_ind_fzeta needs n >= 1")
    x = eval_point(n, convention)
    value = eval_int(spec.partial_sum(n), x)
    other = "minus-n" if convention == "one-minus-n" else "one-minus-n"
    details = {"n": n, "convention": convention, "eval_point": x, "value": value,
               "alternate": {"convention": other, "eval_point": eval_point(n, other),
                             "value": eval_int(spec.partial_sum(n), eval_point(n, other))}}
    if value < 0:
        return ConditionReport("ind-fzeta", Verdict.FAILS,
                               witness={"eval_point": x, "value": value}, details=details)
    return ConditionReport("ind-fzeta", Verdict.HOLDS, details=details)


def check_constructible_f1(groups):
    """Torus positivity of each group's aggregate class; individual summands
    may be negative as long as the negatives cancel within the group."""
    expansions = []
    failing = None
    for g, members in enumerate(groups):
        total = ZERO
        for c in members:
            total = total + as_poly(c)
        coeffs = to_torus_basis(total)
        expansions.append({"group": g, "class": total, "torus_basis": coeffs,
                           "summand_torus_bases": [to_torus_basis(c) for c in members]})
        bad = next(((k, c) for k, c in sorted(coeffs.items()) if c < 0), None)
        if bad and failing is None:
            failing = {"group": g, "k": bad[0], "coefficient": bad[1]}
    if failing:
        return ConditionReport("constructible-f1", Verdict.FAILS, witness=failing,
                               details={"groups": expansions})
    certs = [TorusDecomposition(e["torus_basis"]) for e in expansions]
    return ConditionReport("constructible-f1", Verdict.HOLDS, certificate=certs,
                           details={"groups": expansions})


__all__ = [
    "HabiroElement", "HabiroNormalForm", "IndVarietySpec", "InsufficientLevel",
    "LevelMismatch", "RootOfUnity", "check_constructible_f1", "check_ind_f1",
    "check_ind_fzeta", "ev_n", "ev_zeta", "eval_point", "frobenius", "habiro_add",
    "habiro_mul", "inverse_lefschetz", "lefschetz_inverse_sum", "make",
    "max_taylor_order", "normal_form", "pochhammer", "pochhammer_one_minus",
    "taylor_zeta",
]
