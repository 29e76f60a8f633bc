"""Example families of Habiro-type classes and their sign tables.

Five families are supported, each a sum of explicit terms:

* ``gl``: [GL_m] = L^(m(m-1)/2) (L-1)(L^2-1)...(L^m-1), with [GL_0] = 1.
* ``carlitz``: E_2m = L^(m^2) (L^2-1)(L^4-1)...(L^2m-1), the count of X with
  X^T A X = A for an alternating nonsingular A of order 2m.
* ``sigma``: 1 + sum_{m>=0} q^(m+1) (q)_m; term 0 is the leading 1.
* ``sigma-star``: 2 sum_k (-1)^(k+1) q^(k+1) (q^2-1)(q^4-1)...(q^2k-1).
* ``kontsevich``: sum_k (1-q)(1-q^2)...(1-q^k).

Sign tables evaluate a prescribed partial sum at q = 1-n (or -n) and compare
with the claimed sign pattern.  ``cutoff_rule`` picks the truncation.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .exactpoly import (
    ONE,
    Q,
    ZERO,
    IntPoly,
    PowerSeriesTrunc,
    eval_int,
    series_inverse,
    series_mul,
)
from .grothendieck import (
    GrothClass,
    L,
    TorusDecomposition,
    product_decomposition,
    to_torus_basis,
    torify_punctured_affine,
)
from .habiro import IndVarietySpec, check_ind_fzeta, eval_point, pochhammer, pochhammer_one_minus


class FamilyKind(str, enum.Enum):
    GL = "gl"
    CARLITZ = "carlitz"
    SIGMA = "sigma"
    SIGMA_STAR = "sigma-star"
    KONTSEVICH = "kontsevich"


def _kind(kind):
    return kind if isinstance(kind, FamilyKind) else FamilyKind(kind)


def _even_pochhammer(k):
    """(q^2-1)(q^4-1)...(q^2k-1)."""
    return pochhammer(k).substitute_power(2)


def gl_class(m):
    if m < 0:
        raise ValueError("m must be >= 0")
    return GrothClass(pochhammer(m).shift(m * (m - 1) // 2))


def carlitz_class(m):
    if m < 0:
        raise ValueError("m must be >= 0")
    return GrothClass(_even_pochhammer(m).shift(m * m))


def carlitz_product_class(m):
    """L^(m^2) times the torified classes of A^2i minus a point, i = 1..m."""
    dec = TorusDecomposition({k: math.comb(m * m, k) for k in range(m * m + 1)})
    for i in range(1, m + 1):
        dec = product_decomposition(dec, torify_punctured_affine(2 * i))
    return dec


def term(kind, i):
    """The i-th summand of the family, as an IntPoly in q."""
    kind = _kind(kind)
    if i < 0:
        raise ValueError("term index must be >= 0")
    if kind is FamilyKind.GL:
        return gl_class(i).poly
    if kind is FamilyKind.CARLITZ:
        return carlitz_class(i).poly
    if kind is FamilyKind.SIGMA:
        return ONE if i == 0 else pochhammer(i - 1).shift(i)
    if kind is FamilyKind.SIGMA_STAR:
        sign = 2 if i % 2 else -2
        return _even_pochhammer(i).shift(i + 1) * sign
    return pochhammer_one_minus(i)


def partial_sum(kind, cutoff):
    """Sum of terms 0..cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    out = ZERO
    for i in range(cutoff + 1):
        out = out + term(kind, i)
    return out


# cutoffs used by the sign arguments; "statement" reads the GL union literally
CUTOFF_RULES = ("proof", "statement")


def default_cutoff(kind, n, rule="proof"):
    """Index of the last term in the partial sum whose sign is tested at n."""
    kind = _kind(kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    if rule not in CUTOFF_RULES:
        raise ValueError(f"unknown cutoff rule {rule!r}")
    if kind is FamilyKind.GL:
        return n if rule == "statement" else n - 1
    if kind is FamilyKind.SIGMA:
        return n
    if kind in (FamilyKind.CARLITZ, FamilyKind.SIGMA_STAR):
        return n - 1 if n % 2 else n // 2 - 1
    return n - 1


def claimed_sign(kind, n):
    """Claimed sign at n from the statement: '+' means >= 0."""
    kind = _kind(kind)
    if kind is FamilyKind.GL:
        ok = n % 2 == 1
    elif kind is FamilyKind.CARLITZ:
        ok = n % 2 == 1 or n % 4 == 2
    elif kind is FamilyKind.SIGMA:
        ok = n == 1 or n % 4 in (0, 3)
    elif kind is FamilyKind.SIGMA_STAR:
        ok = n % 4 == 0
    else:
        ok = False
    return "+" if ok else "unclaimed"


def secondary_sign(kind, n):
    """Negativity derived in the sign arguments but not part of the statement."""
    kind = _kind(kind)
    neg = False
    if kind is FamilyKind.GL:
        neg = n % 2 == 0
    elif kind is FamilyKind.CARLITZ:
        neg = n % 4 == 0
    elif kind is FamilyKind.SIGMA:
        neg = n % 4 in (1, 2) and n >= 2
    elif kind is FamilyKind.SIGMA_STAR:
        neg = (n % 2 == 1 and n > 2) or n % 4 == 2
    return "-" if neg else "unclaimed"


def _sign(v):
    return "+" if v > 0 else "-" if v < 0 else "0"


def _agrees(sign, claim):
    if claim == "unclaimed":
        return True
    if claim == "+":
        return sign != "-"
    if claim == "-":
        return sign == "-"
    return sign == claim


@dataclass(frozen=True)
class SignTableRow:
    n: int
    eval_point: int
    value: int
    sign: str
    claimed: str
    match: bool
    cutoff: int
    secondary_claimed: str = "unclaimed"
    secondary_match: bool = True

    def to_json(self):
        return {"n": self.n, "eval_point": self.eval_point, "value": str(self.value),
                "sign": self.sign, "claimed": self.claimed, "match": self.match,
                "cutoff": self.cutoff, "secondary_claimed": self.secondary_claimed,
                "secondary_match": self.secondary_match}

    def csv_fields(self):
        return [self.n, self.eval_point, self.value, self.sign, self.claimed,
                "true" if self.match else "false"]


SIGN_TABLE_CSV_HEADER = ["n", "eval_point", "value", "sign", "claimed", "match"]


def sign_row(kind, n, convention="one-minus-n", rule="proof"):
    cut = default_cutoff(kind, n, rule)
    x = eval_point(n, convention)
    value = eval_int(partial_sum(kind, cut), x)
    s = _sign(value)
    claim = claimed_sign(kind, n)
    sec = secondary_sign(kind, n)
    return SignTableRow(n, x, value, s, claim, _agrees(s, claim), cut, sec, _agrees(s, sec))


def sign_table(kind, n_range, convention="one-minus-n", rule="proof", threads=1):
    """Rows in input order regardless of how they are scheduled."""
    ns = list(n_range)
    if any(n < 1 for n in ns):
        raise ValueError("sign tables need n >= 1")
    job = lambda n: sign_row(kind, n, convention, rule)  # noqa: E731
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(job, ns))
    return [job(n) for n in ns]


@dataclass(frozen=True)
class NumericAside:
    """A specific value asserted in a sign argument, checked against computation."""

    kind: FamilyKind
    n: int
    description: str
    asserted: int
    computed: int

    @property
    def match(self):
        return self.asserted == self.computed

    def to_json(self):
        return {"family": self.kind.value, "n": self.n, "description": self.description,
                "asserted": str(self.asserted), "computed": str(self.computed),
                "match": self.match}


def numeric_asides():
    """Values quoted for small n, recomputed with the default cutoffs."""

    def value(kind, n, start=0):
        cut = default_cutoff(kind, n)
        x = 1 - n
        return sum(eval_int(term(kind, i), x) for i in range(start, cut + 1))

    def gl_tail(n):
        return value(FamilyKind.GL, n, start=1)

    return [
        NumericAside(FamilyKind.GL, 1, "sum over m >= 1 at n=1 is zero", 0, gl_tail(1)),
        NumericAside(FamilyKind.GL, 2, "sum over m >= 1 at n=2 is negative (value -2)",
                     -2, gl_tail(2)),
        NumericAside(FamilyKind.SIGMA, 1, "sigma(1-n) at n=1", 2, value(FamilyKind.SIGMA, 1)),
        NumericAside(FamilyKind.SIGMA, 2, "sigma(1-n) at n=2", -2, value(FamilyKind.SIGMA, 2)),
        NumericAside(FamilyKind.SIGMA_STAR, 1, "sigma*(1-n) at n=1", 0,
                     value(FamilyKind.SIGMA_STAR, 1)),
        NumericAside(FamilyKind.SIGMA_STAR, 2, "sigma*(1-n) at n=2", -2,
                     value(FamilyKind.SIGMA_STAR, 2)),
    ]


# pairing identity for the Kontsevich series

def kontsevich_pair_sides(k):
    """Both sides of (1-q)...(1-q^(2k-1)) + (1-q)...(1-q^2k) = (q^2k-2)(q^(2k-1)-1)...(q-1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lhs = pochhammer_one_minus(2 * k - 1) + pochhammer_one_minus(2 * k)
    rhs = (IntPoly.monomial(2 * k) - 2) * pochhammer(2 * k - 1)
    return lhs, rhs


def kontsevich_pair_identity(k, negate=False):
    lhs, rhs = kontsevich_pair_sides(k)
    return lhs == (-rhs if negate else rhs)


def kontsevich_groups(cutoff, grouping="aggregate"):
    """Summands of X_{K,cutoff}: one aggregate group, or term 0 plus consecutive pairs."""
    terms = [term(FamilyKind.KONTSEVICH, i) for i in range(cutoff + 1)]
    if grouping == "aggregate":
        return [terms]
    if grouping == "pairs":
        groups = [[terms[0]]]
        for i in range(1, cutoff + 1, 2):
            groups.append(terms[i:i + 2])
        return groups
    raise ValueError(f"unknown grouping {grouping!r}")


# q-hypergeometric series and their Habiro-side forms

def sigma_series_expansion(order):
    """sum_n q^(n(n+1)/2) / ((1+q)...(1+q^n)) modulo q^(order+1)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    total = [0] * (order + 1)
    denom = PowerSeriesTrunc.from_poly(ONE, order)
    n = 0
    while n * (n + 1) // 2 <= order:
        if n:
            denom = series_mul(denom, PowerSeriesTrunc.from_poly(IntPoly.monomial(n) + 1, order))
        head = PowerSeriesTrunc.from_poly(IntPoly.monomial(n * (n + 1) // 2), order)
        piece = series_mul(head, series_inverse(denom))
        total = [a + b for a, b in zip(total, piece.coeffs)]
        n += 1
    return PowerSeriesTrunc(order, tuple(total))


def sigma_star_series_expansion(order):
    """2 sum_{n>=1} (-1)^n q^(n^2) / ((1-q)(1-q^3)...(1-q^(2n-1))) modulo q^(order+1)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    total = [0] * (order + 1)
    denom = PowerSeriesTrunc.from_poly(ONE, order)
    n = 1
    while n * n <= order:
        denom = series_mul(denom, PowerSeriesTrunc.from_poly(1 - IntPoly.monomial(2 * n - 1), order))
        head = PowerSeriesTrunc.from_poly(IntPoly.monomial(n * n, 2 if n % 2 == 0 else -2), order)
        piece = series_mul(head, series_inverse(denom))
        total = [a + b for a, b in zip(total, piece.coeffs)]
        n += 1
    return PowerSeriesTrunc(order, tuple(total))


def _habiro_form(kind, order):
    # term i has valuation >= i, so terms past the order contribute nothing
    return PowerSeriesTrunc.from_poly(partial_sum(kind, order), order)


def sigma_habiro_expansion(order):
    return _habiro_form(FamilyKind.SIGMA, order)


def sigma_star_habiro_expansion(order):
    return _habiro_form(FamilyKind.SIGMA_STAR, order)


def series_forms_agree(which, order):
    if which == "sigma":
        return sigma_series_expansion(order) == sigma_habiro_expansion(order)
    if which == "sigma-star":
        return sigma_star_series_expansion(order) == sigma_star_habiro_expansion(order)
    raise ValueError(f"unknown series {which!r}")


# torus expansion of L^(4l+1) - L - 1

@dataclass(frozen=True)
class PairClassReport:
    ell: int
    cls: GrothClass
    computed: dict
    displayed: dict
    diff: dict = field(default_factory=dict)

    def to_json(self):
        s = lambda d: {str(k): str(v) for k, v in sorted(d.items())}  # noqa: E731
        return {"ell": self.ell, "class": str(self.cls), "computed": s(self.computed),
                "displayed": s(self.displayed), "diff": s(self.diff)}


def sigma_star_pair_class(ell):
    """Compare the torus expansion of L^(4l+1)-L-1 with 4l T + sum_{k>=2} C(4l+1,k) T^k."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    top = 4 * ell + 1
    cls = L ** top - L - 1
    computed = to_torus_basis(cls)
    displayed = {1: 4 * ell}
    displayed.update({k: math.comb(top, k) for k in range(2, top + 1)})
    keys = set(computed) | set(displayed)
    diff = {k: computed.get(k, 0) - displayed.get(k, 0) for k in sorted(keys)}
    diff = {k: v for k, v in diff.items() if v}
    return PairClassReport(ell, cls, computed, displayed, diff)


def sigma_star_pair_difference(ell):
    """Consecutive sigma* terms differ by q^(2l)(q^2-1)...(q^(4l-2)-1)(q^(4l+1)-q-1)."""
    lhs = _even_pochhammer(2 * ell).shift(2 * ell + 1) - _even_pochhammer(2 * ell - 1).shift(2 * ell)
    rhs = _even_pochhammer(2 * ell - 1).shift(2 * ell) * (IntPoly.monomial(4 * ell + 1) - Q - 1)
    return lhs == rhs


# ind-variety descriptions: N_{X_n} = sum_{m<n} alpha_m (q)_m

def _alpha(kind):
    kind = _kind(kind)
    if kind is FamilyKind.GL:
        return lambda m: IntPoly.monomial(m * (m - 1) // 2)
    if kind is FamilyKind.SIGMA:
        return lambda m: Q + 1 if m == 0 else IntPoly.monomial(m + 1)

    def plus_product(m):
        out = ONE
        for i in range(1, m + 1):
            out = out * (IntPoly.monomial(i) + 1)
        return out

    if kind is FamilyKind.CARLITZ:
        return lambda m: plus_product(m).shift(m * m)
    if kind is FamilyKind.SIGMA_STAR:
        return lambda m: plus_product(m).shift(m + 1) * (2 if m % 2 else -2)
    return lambda m: IntPoly.constant(-1 if m % 2 else 1)


def family_ind_spec(kind):
    kind = _kind(kind)
    return IndVarietySpec(_alpha(kind), kind.value)


@dataclass(frozen=True)
class DualPointRow:
    family: str
    n: int
    value_one_minus_n: int
    value_minus_n: int

    def to_json(self):
        return {"family": self.family, "n": self.n,
                "value_at_1_minus_n": str(self.value_one_minus_n),
                "value_at_minus_n": str(self.value_minus_n),
                "sign_at_1_minus_n": _sign(self.value_one_minus_n),
                "sign_at_minus_n": _sign(self.value_minus_n),
                "signs_agree": _sign(self.value_one_minus_n) == _sign(self.value_minus_n)}


def dual_point_report(kinds=tuple(FamilyKind), n_range=range(2, 11)):
    """Values of the ind-variety partial sums at q = 1-n and at q = -n."""
    rows = []
    for kind in kinds:
        spec = family_ind_spec(kind)
        for n in n_range:
            rep = check_ind_fzeta(spec, n, "one-minus-n")
            rows.append(DualPointRow(_kind(kind).value, n, rep.details["value"],
                                     rep.details["alternate"]["value"]))
    return rows


__all__ = [
    "CUTOFF_RULES", "DualPointRow", "FamilyKind", "NumericAside", "PairClassReport",
    "SIGN_TABLE_CSV_HEADER", "SignTableRow", "carlitz_class", "carlitz_product_class",
    "claimed_sign", "default_cutoff", "dual_point_report", "family_ind_spec", "gl_class",
    "kontsevich_groups", "kontsevich_pair_identity", "kontsevich_pair_sides",
    "numeric_asides", "partial_sum", "secondary_sign", "series_forms_agree", "sigma_habiro_expansion",
    "sigma_series_expansion", "sigma_star_habiro_expansion", "sigma_star_pair_class",
    "sigma_star_pair_difference", "sigma_star_series_expansion", "sign_row", "sign_table", "term",
]
