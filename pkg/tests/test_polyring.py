from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgenus.polyring import (
    EQ,
    GT,
    LT,
    Monomial,
    MonomialOrder,
    PolyParseError,
    Polynomial,
    compare_monomials,
    format_polynomial,
    parse_polynomial,
    poly_arith,
    polynomial_ring,
)

R4 = polynomial_ring(("X", "Y", "Z", "W"))
R2 = polynomial_ring(("x", "y"))


class TestParse:
    def test_single_term(self):
        f = parse_polynomial("X*W", R4)
        assert f.terms == {Monomial((1, 0, 0, 1)): 1}

    def test_sum_of_variables(self):
        f = parse_polynomial("X + W", R4)
        assert f.terms == {Monomial((1, 0, 0, 0)): 1, Monomial((0, 0, 0, 1)): 1}

    def test_like_terms_collect(self):
        f = parse_polynomial("2*x^2*y - 3*y + x^2*y", R2)
        assert f.terms == {Monomial((2, 1)): 3, Monomial((0, 1)): -3}

    def test_implicit_multiplication(self):
        assert parse_polynomial("2x^2y - 3", R2) == parse_polynomial(
            "2*x^2*y - 3", R2
        )

    def test_leading_minus(self):
        f = parse_polynomial("-x + 1", R2)
        assert f.terms[Monomial((1, 0))] == -1

    def test_unknown_variable(self):
        with pytest.raises(PolyParseError) as err:
            parse_polynomial("x + w", R2)
        assert "unknown variable" in str(err.value)
        assert err.value.pos == 4

    def test_syntax_error_position(self):
        with pytest.raises(PolyParseError) as err:
            parse_polynomial("x + + 2^", R2)
        assert err.value.pos == 4

    def test_greedy_variable_match(self):
        ring = polynomial_ring(("x", "x1"))
        f = parse_polynomial("x1 + x", ring)
        assert f.terms == {Monomial((0, 1)): 1, Monomial((1, 0)): 1}


class TestCompare:
    def test_degrevlex_same_degree(self):
        order = MonomialOrder("degrevlex")
        assert compare_monomials(order, Monomial((2, 1)), Monomial((1, 2))) == GT

    def test_lex_ignores_degree(self):
        order = MonomialOrder("lex")
        assert compare_monomials(order, Monomial((1, 0)), Monomial((0, 3))) == GT

    def test_reflexive(self):
        order = MonomialOrder("degrevlex")
        assert compare_monomials(order, Monomial((1, 2)), Monomial((1, 2))) == EQ

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            compare_monomials(MonomialOrder("lex"), Monomial((1,)), Monomial((1, 2)))


class TestArith:
    def test_additive_identity(self):
        f = parse_polynomial("x^2 - y", R2)
        assert poly_arith("add", f, Polynomial.zero(2)) == f

    def test_difference_of_squares(self):
        f = parse_polynomial("X + W", R4)
        g = parse_polynomial("X - W", R4)
        assert poly_arith("mul", f, g) == parse_polynomial("X^2 - W^2", R4)

    def test_term_by_term_expansion(self):
        f = parse_polynomial("X^6 + W^6", R4)
        g = parse_polynomial("Y^6 + W^6", R4)
        expected = parse_polynomial("X^6*Y^6 + X^6*W^6 + Y^6*W^6 + W^12", R4)
        assert poly_arith("mul", f, g) == expected

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            poly_arith("add", Polynomial.zero(2), Polynomial.zero(3))


monomials4 = st.builds(
    Monomial, st.lists(st.integers(0, 8), min_size=4, max_size=4)
)
orders = st.sampled_from(
    [MonomialOrder("lex"), MonomialOrder("degrevlex"), MonomialOrder("elimination", 2)]
)


class TestOrderLaws:
    @given(orders, monomials4, monomials4)
    def test_antisymmetric_and_total(self, order, a, b):
        ab = compare_monomials(order, a, b)
        ba = compare_monomials(order, b, a)
        assert ab == -ba
        assert (ab == EQ) == (a == b)

    @given(orders, monomials4, monomials4, monomials4)
    def test_transitive(self, order, a, b, c):
        if compare_monomials(order, a, b) != GT and compare_monomials(order, b, c) != GT:
            assert compare_monomials(order, a, c) != GT

    @given(orders, monomials4, monomials4, monomials4)
    def test_multiplicative(self, order, a, b, c):
        ab = compare_monomials(order, a, b)
        assert compare_monomials(order, a.mul(c), b.mul(c)) == ab

    @given(orders, monomials4, monomials4)
    def test_refines_divisibility(self, order, a, b):
        if a.divides(b) and a != b:
            assert compare_monomials(order, a, b) == LT


def small_polys(arity=2):
    coeffs = st.integers(-6, 6)
    monos = st.builds(Monomial, st.lists(st.integers(0, 3), min_size=arity, max_size=arity))
    return st.builds(
        lambda pairs: Polynomial(pairs, arity),
        st.lists(st.tuples(monos, coeffs), max_size=5),
    )


class TestRingLaws:
    @given(small_polys(), small_polys())
    def test_add_commutes(self, f, g):
        assert f + g == g + f

    @given(small_polys(), small_polys())
    def test_mul_commutes(self, f, g):
        assert f * g == g * f

    @settings(max_examples=60)
    @given(small_polys(), small_polys(), small_polys())
    def test_mul_associates(self, f, g, h):
        assert (f * g) * h == f * (g * h)

    @settings(max_examples=60)
    @given(small_polys(), small_polys(), small_polys())
    def test_distributive(self, f, g, h):
        assert f * (g + h) == f * g + f * h


class TestRoundTrip:
    @given(small_polys())
    def test_parse_print_fixed_point(self, f):
        assert parse_polynomial(format_polynomial(f, R2), R2) == f

    def test_rational_coefficients_survive(self):
        f = Polynomial({Monomial((1, 0)): Fraction(1, 2), Monomial((0, 0)): -2}, 2)
        assert parse_polynomial(format_polynomial(f, R2), R2) == f

    @pytest.mark.parametrize(
        "src, ring",
        [("X*W", R4), ("2x^2y - 3", R2), ("X^6 + W^6", R4), ("-X + 4*Y^2", R4)],
    )
    def test_reparse_canonical_form(self, src, ring):
        f = parse_polynomial(src, ring)
        printed = format_polynomial(f, ring)
        assert parse_polynomial(printed, ring) == f
        assert format_polynomial(parse_polynomial(printed, ring), ring) == printed
