import math
import random

import pytest
import sympy

from fzeta.exactpoly import ONE, Q, IntPoly, eval_int
from fzeta.families import (
    FamilyKind,
    carlitz_class,
    carlitz_product_class,
    claimed_sign,
    default_cutoff,
    dual_point_report,
    family_ind_spec,
    gl_class,
    kontsevich_groups,
    kontsevich_pair_identity,
    kontsevich_pair_sides,
    numeric_asides,
    partial_sum,
    secondary_sign,
    series_forms_agree,
    sigma_series_expansion,
    sigma_star_pair_class,
    sigma_star_pair_difference,
    sigma_star_series_expansion,
    sign_row,
    sign_table,
    term,
)
from fzeta.grothendieck import L, to_torus_basis
from fzeta.habiro import check_constructible_f1

q = sympy.symbols("q")


def sym_value(expr, x):
    return int(expr.subs(q, x))


def sym_pochhammer(m):
    return sympy.prod([q ** i - 1 for i in range(1, m + 1)])


SYMPY_TERMS = {
    FamilyKind.GL: lambda m: q ** (m * (m - 1) // 2) * sym_pochhammer(m),
    FamilyKind.CARLITZ: lambda m: q ** (m * m) * sympy.prod([q ** (2 * i) - 1 for i in range(1, m + 1)]),
    FamilyKind.SIGMA: lambda m: 1 if m == 0 else q ** m * sym_pochhammer(m - 1),
    FamilyKind.SIGMA_STAR: lambda k: 2 * (-1) ** (k + 1) * q ** (k + 1) * sympy.prod(
        [q ** (2 * i) - 1 for i in range(1, k + 1)]),
    FamilyKind.KONTSEVICH: lambda k: sympy.prod([1 - q ** i for i in range(1, k + 1)]),
}


class TestClasses:
    def test_gl(self):
        assert gl_class(0).poly == ONE
        assert gl_class(1) == L - 1
        assert gl_class(2).count(2) == 6
        assert gl_class(3).count(2) == 168

    @pytest.mark.parametrize("m", range(7))
    def test_gl_formula(self, m):
        rng = random.Random(m)
        for x in [rng.randint(-9, 9) for _ in range(5)]:
            expect = x ** (m * (m - 1) // 2) * math.prod(x ** i - 1 for i in range(1, m + 1))
            assert gl_class(m).count(x) == expect

    def test_carlitz(self):
        assert carlitz_class(0).poly == ONE
        assert carlitz_class(1) == L * (L ** 2 - 1)
        assert carlitz_class(1).count(2) == 6
        assert carlitz_class(1).count(3) == 24

    @pytest.mark.parametrize("m", range(9))
    def test_carlitz_product(self, m):
        assert carlitz_product_class(m).to_class() == carlitz_class(m)


class TestPartialSums:
    def test_examples(self):
        assert partial_sum("sigma", 1) == 1 + Q
        assert partial_sum("kontsevich", 2) == IntPoly([3, -2, -1, 1])
        assert partial_sum("gl", 1) == Q

    @pytest.mark.parametrize("kind", list(FamilyKind))
    def test_terms_against_sympy(self, kind):
        for i in range(7):
            expr = sympy.expand(SYMPY_TERMS[kind](i))
            for x in (-3, -1, 2, 5):
                assert eval_int(term(kind, i), x) == sym_value(expr, x)

    @pytest.mark.parametrize("kind", list(FamilyKind))
    def test_monotone(self, kind):
        for c in range(1, 10):
            assert partial_sum(kind, c) - partial_sum(kind, c - 1) == term(kind, c)

    def test_negative_cutoff(self):
        with pytest.raises(ValueError):
            partial_sum("gl", -1)


class TestSignTables:
    def test_cutoffs(self):
        assert [default_cutoff("gl", n) for n in (1, 2, 3)] == [0, 1, 2]
        assert default_cutoff("gl", 3, "statement") == 3
        assert [default_cutoff("carlitz", n) for n in (3, 4, 6)] == [2, 1, 2]
        assert default_cutoff("sigma", 4) == 4
        assert [default_cutoff("sigma-star", n) for n in (1, 2, 5, 8)] == [0, 0, 4, 3]

    def test_claims(self):
        assert [claimed_sign("gl", n) for n in (1, 2)] == ["+", "unclaimed"]
        assert [claimed_sign("carlitz", n) for n in (2, 4, 5)] == ["+", "unclaimed", "+"]
        assert [claimed_sign("sigma", n) for n in (1, 2, 3, 4, 5)] == \
            ["+", "unclaimed", "+", "+", "unclaimed"]
        assert claimed_sign("sigma-star", 8) == "+"
        assert claimed_sign("kontsevich", 3) == "unclaimed"
        assert secondary_sign("sigma", 2) == "-"
        assert secondary_sign("sigma", 1) == "unclaimed"

    def test_known_values(self):
        assert sign_row("gl", 3).value == 16
        assert sign_row("sigma", 4).value == 73402
        assert sign_row("sigma", 2).value == -2
        assert sign_row("carlitz", 4).value == -23
        assert sign_row("sigma-star", 2).value == 2

    @pytest.mark.parametrize("kind", ["gl", "carlitz", "sigma", "sigma-star"])
    def test_statements_hold(self, kind):
        assert all(r.match for r in sign_table(kind, range(1, 41)))

    @pytest.mark.parametrize("kind", ["gl", "carlitz", "sigma"])
    def test_secondary_claims_hold(self, kind):
        assert all(r.secondary_match for r in sign_table(kind, range(1, 41)))

    def test_sigma_star_secondary_claims_fail(self):
        rows = sign_table("sigma-star", range(1, 41))
        assert all(r.value > 0 for r in rows[1:])
        assert not any(r.secondary_match for r in rows if r.secondary_claimed == "-")

    def test_gl_statement_cutoff_breaks_odd_rows(self):
        rows = sign_table("gl", range(1, 12), rule="statement")
        assert [r.n for r in rows if not r.match] == [3, 5, 7, 9, 11]
        assert rows[2].value == -632

    def test_value_matches_sympy(self):
        for kind in FamilyKind:
            for n in (1, 2, 5, 8):
                cut = default_cutoff(kind, n)
                expr = sum(SYMPY_TERMS[kind](i) for i in range(cut + 1))
                assert sign_row(kind, n).value == sym_value(sympy.expand(expr), 1 - n)

    def test_threads_preserve_order(self):
        serial = sign_table("carlitz", range(1, 25))
        assert sign_table("carlitz", range(1, 25), threads=4) == serial

    def test_minus_n_convention(self):
        row = sign_row("gl", 3, convention="minus-n")
        assert row.eval_point == -3

    def test_json_and_csv(self):
        row = sign_row("sigma", 4)
        assert row.to_json()["value"] == "73402"
        assert row.csv_fields() == [4, -3, 73402, "+", "+", "true"]

    def test_numeric_asides(self):
        found = {(a.kind.value, a.n): a for a in numeric_asides()}
        assert found[("gl", 1)].match and found[("gl", 2)].match
        assert found[("sigma", 2)].match
        assert (found[("sigma", 1)].asserted, found[("sigma", 1)].computed) == (2, 1)
        assert (found[("sigma-star", 2)].asserted, found[("sigma-star", 2)].computed) == (-2, 2)


class TestKontsevich:
    def test_pair_k1(self):
        lhs, rhs = kontsevich_pair_sides(1)
        assert lhs == (1 - Q) + (1 - Q) * (1 - Q ** 2)
        assert rhs == (Q ** 2 - 2) * (Q - 1)

    @pytest.mark.parametrize("k", range(1, 26))
    def test_identity(self, k):
        assert kontsevich_pair_identity(k)
        assert not kontsevich_pair_identity(k, negate=True)

    def test_single_pair_not_torus_positive(self):
        assert to_torus_basis(kontsevich_pair_sides(1)[1]) == {1: -1, 2: 2, 3: 1}
        assert not check_constructible_f1([[kontsevich_pair_sides(1)[1]]]).holds

    def test_grouped_sum(self):
        rep = check_constructible_f1(kontsevich_groups(4))
        assert not rep.holds
        assert rep.witness == {"group": 0, "k": 1, "coefficient": -1}
        expr = sympy.expand(sum(SYMPY_TERMS[FamilyKind.KONTSEVICH](k) for k in range(5)))
        t = sympy.symbols("t")
        tb = sympy.Poly(sympy.expand(expr.subs(q, t + 1)), t).all_coeffs()[::-1]
        assert [int(c) for c in tb] == [1, -1, 2, -5, 15, 67, 97, 76, 35, 9, 1]

    def test_pair_grouping(self):
        groups = kontsevich_groups(4, "pairs")
        assert [len(g) for g in groups] == [1, 2, 2]


class TestSeries:
    def test_sigma_display(self):
        assert sigma_series_expansion(8).coeffs == (1, 1, -1, 2, -2, 1, 0, 1, -2)
        assert sigma_series_expansion(0).coeffs == (1,)

    def test_sigma_star_display(self):
        assert sigma_star_series_expansion(3).coeffs == (0, -2, -2, -2)
        assert sigma_star_series_expansion(10).coeffs == (0, -2, -2, -2, 0, 0, 0, 2, 2, 0, 2)

    def test_sympy_series(self):
        expr = sum(q ** (n * (n + 1) // 2) / sympy.prod([1 + q ** i for i in range(1, n + 1)])
                   for n in range(6))
        ser = sympy.series(expr, q, 0, 13).removeO()
        coeffs = sympy.Poly(ser, q).all_coeffs()[::-1]
        assert sigma_series_expansion(12).coeffs == tuple(int(c) for c in coeffs)

    @pytest.mark.parametrize("which", ["sigma", "sigma-star"])
    def test_forms_agree(self, which):
        assert series_forms_agree(which, 40)


class TestPairClass:
    @pytest.mark.parametrize("ell", range(1, 5))
    def test_constant_term_diff(self, ell):
        rep = sigma_star_pair_class(ell)
        assert rep.diff == {0: -1}
        assert rep.computed[0] == -1

    def test_expansion_l1(self):
        assert sigma_star_pair_class(1).computed == {0: -1, 1: 4, 2: 10, 3: 10, 4: 5, 5: 1}

    @pytest.mark.parametrize("ell", range(1, 6))
    def test_difference_identity(self, ell):
        assert sigma_star_pair_difference(ell)


class TestIndSpecs:
    @pytest.mark.parametrize("kind", list(FamilyKind))
    def test_matches_partial_sums(self, kind):
        spec = family_ind_spec(kind)
        for n in range(1, 9):
            cut = n if kind is FamilyKind.SIGMA else n - 1
            assert spec.partial_sum(n) == partial_sum(kind, cut)

    def test_dual_report(self):
        rows = dual_point_report(n_range=range(2, 11))
        assert len(rows) == 5 * 9
        sigma4 = next(r for r in rows if r.family == "sigma" and r.n == 4)
        assert sigma4.value_one_minus_n == 73402
        assert sigma4.value_minus_n == eval_int(partial_sum("sigma", 4), -4)
