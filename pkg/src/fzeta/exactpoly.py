"""Exact integer polynomial, Laurent polynomial, truncated power series and
cyclotomic-integer arithmetic.

Everything here is immutable.  Coefficients are Python ints, so there is no
overflow anywhere; the inner loops live in :mod:`fzeta.kernels`.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from math import gcd

from . import kernels

NEG_INF = -math.inf
KARATSUBA_THRESHOLD = 64


def _normalize(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _add_lists(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _sub_lists(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _mul_lists(a, b):
    """Schoolbook below the threshold, Karatsuba at degree >= 64."""
    if len(a) < len(b):
        a, b = b, a
    lb = len(b)
    if lb == 0:
        return []
    if lb - 1 < KARATSUBA_THRESHOLD:
        return kernels.poly_mul(a, b)
    if len(a) >= 2 * lb:
        # unbalanced: slice the long operand into blocks of the short one's length
        out = [0] * (len(a) + lb - 1)
        for start in range(0, len(a), lb):
            part = _mul_lists(a[start:start + lb], b)
            for i, c in enumerate(part):
                out[start + i] += c
        return out
    m = len(a) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _mul_lists(a0, b0)
    z2 = _mul_lists(a1, b1)
    z1 = _sub_lists(_sub_lists(_mul_lists(_add_lists(a0, a1), _add_lists(b0, b1)), z0), z2)
    out = [0] * (len(a) + lb - 1)
    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        out[i + m] += c
    for i, c in enumerate(z2):
        out[i + 2 * m] += c
    return out


class IntPoly:
    """Dense polynomial in q with integer coefficients; ``coeffs[i]`` is the
    coefficient of q^i and the tuple never ends in a zero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _normalize(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "coeffs", _normalize(coeffs))
        return obj

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise ValueError("monomial exponent must be non-negative")
        return cls([0] * k + [c])

    @classmethod
    def from_terms(cls, terms):
        """Build from an iterable of (exponent, coefficient) pairs."""
        terms = list(terms)
        if not terms:
            return cls()
        top = max(k for k, _ in terms)
        coeffs = [0] * (top + 1)
        for k, c in terms:
            if k < 0:
                raise ValueError(f"negative exponent {k} in an IntPoly")
            coeffs[k] += c
        return cls(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def valuation(self):
        """Lowest exponent with a nonzero coefficient (None for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def terms(self):
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    # ring operations

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly._raw(_add_lists(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly._raw(_sub_lists(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return IntPoly._raw([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._raw(_mul_lists(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        return eval_int(self, x)

    def __divmod__(self, d):
        return divrem_unit(self, d)

    def shift(self, k):
        """Multiply by q^k (k >= 0)."""
        if not self.coeffs or k == 0:
            return self
        return IntPoly._raw([0] * k + list(self.coeffs))

    def substitute_power(self, k):
        """q -> q^k."""
        if k < 1:
            raise ValueError("substitute_power needs k >= 1")
        if k == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly._raw(out)

    def scale_var(self, a):
        """q -> a*q."""
        out, pw = [], 1
        for c in self.coeffs:
            out.append(c * pw)
            pw *= a
        return IntPoly._raw(out)

    def taylor_shift(self, a):
        """q -> q + a."""
        return IntPoly._raw(kernels.poly_taylor_shift(list(self.coeffs), a))

    def hasse_derivative(self, j):
        """Coefficient extraction for Taylor expansions: sum_i C(i, j) c_i q^(i-j)."""
        if j == 0:
            return self
        return IntPoly._raw([math.comb(i, j) * c for i, c in enumerate(self.coeffs)][j:])

    def fold(self, n):
        """Reduce modulo q^n - 1 (exponents taken mod n)."""
        if n < 1:
            raise ValueError("fold modulus must be >= 1")
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] += c
        return IntPoly._raw(out)

    def truncate(self, k):
        """Drop terms of degree >= k."""
        return IntPoly._raw(list(self.coeffs[:k]))

    def to_str(self, var="q"):
        return format_human(self.terms(), var)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"IntPoly({format_poly(self)!r})"


Q = IntPoly((0, 1))
ONE = IntPoly((1,))
ZERO = IntPoly()


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def neg(a):
    return -a


def mul(a, b):
    return a * b


def eval_int(p, x):
    """Exact value p(x) by Horner's rule."""
    return kernels.poly_horner(list(p.coeffs), x)


def divrem_unit(a, d):
    """Quotient and remainder of ``a`` by ``d``, where lead(d) is +1 or -1."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if d.leading not in (1, -1):
        raise ValueError(f"divisor leading coefficient {d.leading} is not a unit")
    quot, rem = kernels.poly_divrem_unit(list(a.coeffs), list(d.coeffs))
    return IntPoly._raw(quot), IntPoly._raw(rem)


def exact_div(a, d):
    quot, rem = divrem_unit(a, d)
    if rem:
        raise ArithmeticError(f"{d} does not divide {a}")
    return quot


# cyclotomic polynomials

CYCLOTOMIC_CACHE_BOUND = 512
_cyclotomic_cache = {}
_cyclotomic_lock = threading.Lock()


def divisors(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def cyclotomic(n):
    """Phi_n, built as (q^n - 1) divided by Phi_d for the proper divisors d."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    hit = _cyclotomic_cache.get(n)
    if hit is not None:
        return hit
    num = IntPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        num = exact_div(num, cyclotomic(d))
    if n <= CYCLOTOMIC_CACHE_BOUND:
        with _cyclotomic_lock:
            num = _cyclotomic_cache.setdefault(n, num)
    return num


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@dataclass(frozen=True)
class RootOfUnity:
    """zeta = exp(2 pi i numer / order), a primitive root of unity."""

    order: int
    numer: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("root of unity order must be >= 1")
        if not 1 <= self.numer <= self.order or gcd(self.numer, self.order) != 1:
            raise ValueError(f"{self.numer}/{self.order} does not give a primitive root")

    def to_complex(self):
        return complex(math.cos(2 * math.pi * self.numer / self.order),
                       math.sin(2 * math.pi * self.numer / self.order))


class CyclotomicInt:
    """Element of Z[x]/(Phi_n(x)) with x standing for exp(2 pi i / n)."""

    __slots__ = ("order", "residue")

    def __init__(self, order, residue):
        if isinstance(residue, int):
            residue = IntPoly.constant(residue)
        phi = cyclotomic(order)
        if residue.degree >= phi.degree:
            residue = divrem_unit(residue, phi)[1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "residue", residue)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInt is immutable")

    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.order, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"mixing Z[zeta_{self.order}] and Z[zeta_{other.order}]")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.order, self.residue + other.residue)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.order, self.residue - other.residue)

    def __neg__(self):
        return CyclotomicInt(self.order, -self.residue)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.order, self.residue * other.residue)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt(self.order, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.order == other.order and self.residue == other.residue

    def __hash__(self):
        return hash((self.order, self.residue))

    def is_zero(self):
        return self.residue.is_zero()

    def to_complex(self):
        z = complex(math.cos(2 * math.pi / self.order), math.sin(2 * math.pi / self.order))
        acc = 0j
        for c in reversed(self.residue.coeffs):
            acc = acc * z + c
        return acc

    def as_int(self):
        """The integer value when the residue is constant, else None."""
        if self.residue.degree <= 0:
            return self.residue[0]
        return None

    def __repr__(self):
        return f"CyclotomicInt({self.order}, {format_poly(self.residue)!r})"

    def __str__(self):
        return self.residue.to_str(f"z{self.order}")


def eval_root(p, z):
    """p(zeta) in Z[zeta]: q -> x^numer, then reduction mod Phi_order."""
    n = z.order
    out = [0] * n
    for i, c in enumerate(p.coeffs):
        if c:
            out[(i * z.numer) % n] += c
    return CyclotomicInt(n, IntPoly(out))


# q-analogues

def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return IntPoly([1] * n)


def q_factorial(n):
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def q_binomial(n, j):
    """Gaussian binomial coefficient as an exact polynomial quotient."""
    if n < 0 or j < 0 or j > n:
        raise ValueError(f"q_binomial needs 0 <= j <= n, got n={n}, j={j}")
    return exact_div(q_factorial(n), q_factorial(j) * q_factorial(n - j))


# truncated power series

@dataclass(frozen=True)
class PowerSeriesTrunc:
    """Power series known modulo q^(order+1); ``coeffs`` has order+1 entries."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("a series of order K carries exactly K+1 coefficients")

    @classmethod
    def from_poly(cls, p, order):
        c = list(p.coeffs[:order + 1])
        return cls(order, tuple(c + [0] * (order + 1 - len(c))))

    def to_poly(self):
        return IntPoly(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __neg__(self):
        return PowerSeriesTrunc(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return series_add(self, -other)


def _common_order(a, b):
    if a.order != b.order:
        raise ValueError(f"series orders differ: {a.order} vs {b.order}")
    return a.order


def series_add(a, b):
    k = _common_order(a, b)
    return PowerSeriesTrunc(k, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_mul(a, b):
    k = _common_order(a, b)
    return PowerSeriesTrunc.from_poly(IntPoly(a.coeffs) * IntPoly(b.coeffs), k)


def series_inverse(s):
    c0 = s.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit")
    inv = [c0]
    for k in range(1, s.order + 1):
        acc = sum(s.coeffs[i] * inv[k - i] for i in range(1, k + 1))
        inv.append(-c0 * acc)
    return PowerSeriesTrunc(s.order, tuple(inv))


# text formats

class PolyParseError(ValueError):
    pass


def parse_terms(text):
    """Parse the sparse "k:c;k:c" or dense "c0,c1,..." format into terms.

    Exponents may be negative in the sparse form (Laurent input).
    """
    text = text.strip()
    if not text:
        return []
    try:
        if ":" in text:
            terms = []
            for chunk in text.split(";"):
                chunk = chunk.strip()
                if not chunk:
                    continue
                k, c = chunk.split(":")
                terms.append((int(k), int(c)))
            return terms
        return [(i, int(c)) for i, c in enumerate(text.split(",")) if c.strip()]
    except ValueError as exc:
        raise PolyParseError(f"cannot parse polynomial {text!r}: {exc}") from None


def parse_poly(text):
    terms = parse_terms(text)
    if any(k < 0 for k, _ in terms):
        raise PolyParseError(f"negative exponent in {text!r}; a polynomial was expected")
    return IntPoly.from_terms(terms)


def format_terms(terms):
    terms = [(k, c) for k, c in terms if c]
    if not terms:
        return "0"
    return ";".join(f"{k}:{c}" for k, c in sorted(terms))


def format_poly(p):
    return format_terms(p.terms())


def format_human(terms, var="q"):
    parts = []
    for k, c in sorted(((k, c) for k, c in terms if c), reverse=True):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class LaurentPoly:
    """q^offset * poly, with poly having nonzero constant term (or being 0)."""

    __slots__ = ("poly", "offset")

    def __init__(self, poly=ZERO, offset=0):
        v = poly.valuation()
        if v is None:
            poly, offset = ZERO, 0
        elif v:
            poly = IntPoly._raw(list(poly.coeffs[v:]))
            offset += v
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "offset", offset)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_terms(cls, terms):
        terms = [(k, c) for k, c in terms if c]
        if not terms:
            return cls()
        low = min(k for k, _ in terms)
        return cls(IntPoly.from_terms((k - low, c) for k, c in terms), low)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, IntPoly):
            return cls(value, 0)
        if isinstance(value, int):
            return cls(IntPoly.constant(value), 0)
        raise TypeError(f"cannot make a Laurent polynomial from {type(value).__name__}")

    def terms(self):
        return [(k + self.offset, c) for k, c in self.poly.terms()]

    def is_zero(self):
        return self.poly.is_zero()

    def is_polynomial(self):
        return self.offset >= 0

    def to_intpoly(self):
        if self.offset < 0:
            raise ValueError("Laurent polynomial has negative powers")
        return self.poly.shift(self.offset)

    @property
    def top_degree(self):
        return self.offset + self.poly.degree

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        low = min(self.offset, other.offset)
        return LaurentPoly(self.poly.shift(self.offset - low) + other.poly.shift(other.offset - low), low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self.poly, self.offset)

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        return LaurentPoly(self.poly * other.poly, self.offset + other.offset)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.offset == other.offset and self.poly == other.poly

    def __hash__(self):
        return hash(("LaurentPoly", self.offset, self.poly))

    def to_str(self, var="q"):
        return format_human(self.terms(), var)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LaurentPoly({format_terms(self.terms())!r})"
