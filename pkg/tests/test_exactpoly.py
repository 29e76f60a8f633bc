import cmath
import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fzeta.exactpoly import (
    KARATSUBA_THRESHOLD,
    NEG_INF,
    ONE,
    Q,
    ZERO,
    CyclotomicInt,
    IntPoly,
    LaurentPoly,
    PolyParseError,
    PowerSeriesTrunc,
    RootOfUnity,
    cyclotomic,
    divisors,
    divrem_unit,
    euler_phi,
    eval_int,
    eval_root,
    exact_div,
    format_poly,
    parse_poly,
    parse_terms,
    q_binomial,
    q_factorial,
    q_int,
    series_inverse,
    series_mul,
)

from strategies import int_polys, unit_lead_polys

x = sympy.symbols("x")


def to_sympy(p):
    return sum(c * x ** i for i, c in enumerate(p.coeffs))


def P(*c):
    return IntPoly(c)


class TestBasics:
    def test_canonical_trailing_zeros(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).coeffs == ()

    def test_degree_of_zero(self):
        assert ZERO.degree == NEG_INF
        assert P(5).degree == 0

    def test_difference_of_squares(self):
        assert (Q - 1) * (Q + 1) == P(-1, 0, 1)

    def test_zero_absorbs(self):
        assert ZERO * P(3, 4, 5) == ZERO

    def test_hand_expansion(self):
        p = (1 - Q) * (1 - Q ** 2)
        assert p == P(1, -1, -1, 1)
        assert eval_int(p, 2) == 3

    def test_eval(self):
        assert eval_int(P(1, 1, 1), 2) == 7
        assert eval_int(P(9, 3, 4), 0) == 9
        assert eval_int(P(0, 1, -1, -1, 1), 2) == 6

    def test_immutable(self):
        with pytest.raises(AttributeError):
            Q.coeffs = (1,)

    def test_substitutions(self):
        p = P(1, 2, 3)
        assert p.substitute_power(2) == P(1, 0, 2, 0, 3)
        assert p.scale_var(-1) == P(1, -2, 3)
        assert p.taylor_shift(1) == P(6, 8, 3)
        assert p.fold(2) == P(4, 2)
        assert p.shift(2) == P(0, 0, 1, 2, 3)

    def test_hasse_derivative(self):
        p = P(0, 0, 0, 1)
        assert p.hasse_derivative(1) == P(0, 0, 3)
        assert p.hasse_derivative(2) == P(0, 3)
        assert p.hasse_derivative(4) == ZERO


class TestDivision:
    def test_examples(self):
        assert divrem_unit(Q ** 3, Q ** 2 - 1) == (Q, Q)
        a = (Q - 1) * (Q ** 2 - 1)
        assert divrem_unit(a, Q ** 2 - 1) == (Q - 1, ZERO)
        assert divrem_unit(Q ** 4 + 1, Q ** 2 + 1) == (Q ** 2 - 1, P(2))

    def test_rejects(self):
        with pytest.raises(ZeroDivisionError):
            divrem_unit(Q, ZERO)
        with pytest.raises(ValueError):
            divrem_unit(Q ** 3, 2 * Q)
        with pytest.raises(ArithmeticError):
            exact_div(Q, Q ** 2 + 1)

    @given(int_polys(20, 1000), unit_lead_polys())
    def test_reconstruction(self, a, d):
        quot, rem = divrem_unit(a, d)
        assert quot * d + rem == a
        assert rem.degree < d.degree


class TestRing:
    @given(int_polys(), int_polys(), int_polys())
    def test_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b - b == a

    @given(st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=60, max_size=200),
           st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=60, max_size=200))
    def test_karatsuba_matches_sympy(self, a, b):
        pa, pb = IntPoly(a), IntPoly(b)
        assert max(len(a), len(b)) >= KARATSUBA_THRESHOLD - 4
        expected = (sympy.Poly(a[::-1], x) * sympy.Poly(b[::-1], x)).all_coeffs()[::-1]
        assert pa * pb == IntPoly([int(c) for c in expected])

    def test_pow(self):
        assert (Q + 1) ** 5 == P(1, 5, 10, 10, 5, 1)
        assert (Q + 1) ** 0 == ONE


class TestCyclotomic:
    def test_examples(self):
        assert cyclotomic(1) == Q - 1
        assert cyclotomic(4) == Q ** 2 + 1
        assert cyclotomic(12) == P(1, 0, -1, 0, 1)

    @pytest.mark.parametrize("n", range(1, 121))
    def test_product_over_divisors(self, n):
        prod = ONE
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == IntPoly.monomial(n) - 1

    @pytest.mark.parametrize("n", [1, 2, 6, 15, 30, 105])
    def test_against_sympy(self, n):
        expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert list(cyclotomic(n).coeffs) == [int(c) for c in expected]
        assert cyclotomic(n).degree == euler_phi(n)


class TestRoots:
    def test_examples(self):
        assert eval_root(P(1, 1, 1), RootOfUnity(3)).is_zero()
        assert eval_root(P(7), RootOfUnity(5, 2)) == 7
        assert eval_root(P(0, 1, 0, 1), RootOfUnity(4)).is_zero()

    def test_bad_roots(self):
        with pytest.raises(ValueError):
            RootOfUnity(4, 2)
        with pytest.raises(ValueError):
            RootOfUnity(0)

    def test_mixing_orders(self):
        with pytest.raises(ValueError):
            CyclotomicInt(3, Q) + CyclotomicInt(4, Q)

    @given(int_polys(15, 50), int_polys(15, 50), st.integers(1, 30), st.data())
    def test_homomorphism(self, p, r, n, data):
        k = data.draw(st.sampled_from([k for k in range(1, n + 1) if math.gcd(k, n) == 1]))
        z = RootOfUnity(n, k)
        assert eval_root(p * r, z) == eval_root(p, z) * eval_root(r, z)
        assert eval_root(p + r, z) == eval_root(p, z) + eval_root(r, z)

    @given(int_polys(10, 20), st.integers(1, 24), st.data())
    def test_float_sanity(self, p, n, data):
        k = data.draw(st.sampled_from([k for k in range(1, n + 1) if math.gcd(k, n) == 1]))
        z = RootOfUnity(n, k)
        zeta = cmath.exp(2j * math.pi * k / n)
        direct = sum(c * zeta ** i for i, c in enumerate(p.coeffs))
        assert abs(eval_root(p, z).to_complex() - direct) < 1e-6


class TestQAnalogues:
    def test_examples(self):
        assert q_int(3) == P(1, 1, 1)
        assert q_binomial(5, 0) == ONE
        assert eval_int(q_binomial(4, 2), 2) == 35
        assert q_factorial(3) == P(1, 1, 1) * P(1, 1)

    def test_rejects(self):
        with pytest.raises(ValueError):
            q_binomial(2, 3)
        with pytest.raises(ValueError):
            q_int(-1)

    @pytest.mark.parametrize("n,j", [(n, j) for n in range(8) for j in range(n + 1)])
    def test_pascal(self, n, j):
        if 0 < j < n:
            assert q_binomial(n, j) == q_binomial(n - 1, j - 1) + q_binomial(n - 1, j).shift(j)


class TestSeries:
    def test_geometric(self):
        s = PowerSeriesTrunc.from_poly(1 + Q, 3)
        assert series_inverse(s).coeffs == (1, -1, 1, -1)

    def test_two_factors(self):
        s = PowerSeriesTrunc.from_poly((1 + Q) * (1 + Q ** 2), 4)
        expected = sympy.series(1 / ((1 + x) * (1 + x ** 2)), x, 0, 5).removeO()
        assert series_inverse(s).coeffs == (1, -1, 0, 0, 1)
        assert series_inverse(s).to_poly() == IntPoly(
            [int(c) for c in sympy.Poly(expected, x).all_coeffs()[::-1]])

    def test_nonunit(self):
        with pytest.raises(ValueError):
            series_inverse(PowerSeriesTrunc.from_poly(2 + Q, 3))

    def test_bad_length(self):
        with pytest.raises(ValueError):
            PowerSeriesTrunc(3, (1, 2))

    @given(st.lists(st.integers(-9, 9), max_size=12), st.sampled_from([1, -1]), st.integers(0, 15))
    def test_inverse_property(self, tail, c0, order):
        s = PowerSeriesTrunc.from_poly(IntPoly([c0] + tail), order)
        assert series_mul(s, series_inverse(s)) == PowerSeriesTrunc.from_poly(ONE, order)


class TestTextFormat:
    def test_sparse_and_dense(self):
        assert parse_poly("0:1;2:-1") == 1 - Q ** 2
        assert parse_poly("1,0,-1") == 1 - Q ** 2
        assert parse_poly("0") == ZERO

    def test_errors(self):
        with pytest.raises(PolyParseError):
            parse_poly("a:b")
        with pytest.raises(PolyParseError):
            parse_poly("-1:3")

    def test_laurent_terms(self):
        assert parse_terms("-2:1;0:3") == [(-2, 1), (0, 3)]

    @given(int_polys(20, 10 ** 30))
    def test_roundtrip(self, p):
        assert parse_poly(format_poly(p)) == p


class TestLaurent:
    def test_canonical(self):
        a = LaurentPoly(P(0, 0, 3, 1), -1)
        assert a.offset == 1 and a.poly == P(3, 1)
        assert LaurentPoly(ZERO, 5).offset == 0

    def test_arithmetic(self):
        inv = LaurentPoly(ONE, -1)
        assert inv * LaurentPoly.coerce(Q) == LaurentPoly.coerce(1)
        assert (inv + 1).terms() == [(-1, 1), (0, 1)]
        assert not inv.is_polynomial()
        with pytest.raises(ValueError):
            inv.to_intpoly()
