import pytest

from conftest import plane_semigroup_job
from sgenus.groebner import buchberger, normal_form, quotient_length
from sgenus.idealops import (
    ideal_colon,
    ideal_combine,
    ideal_intersect,
    ideal_membership,
    ideal_power,
    make_ideal,
)
from sgenus.polyring import parse_polynomial, polynomial_ring
from sgenus.semigroup import sg_colon_max, sg_length

R2 = polynomial_ring(("x", "y"))
R4 = polynomial_ring(("X", "Y", "Z", "W"))


def ideals_equal(a, b):
    """Equality of ideals via the canonical reduced basis."""
    ring = a.ring
    ba = buchberger(list(a.gens) + list(ring.quotient_gens), ring.order)
    bb = buchberger(list(b.gens) + list(ring.quotient_gens), ring.order)
    return ba.gens == bb.gens


class TestCombine:
    def test_sum(self):
        a = make_ideal(R2, ("x",))
        b = make_ideal(R2, ("y",))
        assert ideal_combine("sum", a, b).gens == make_ideal(R2, ("x", "y")).gens

    def test_square_product(self):
        m = make_ideal(R2, ("x", "y"))
        sq = ideal_combine("product", m, m)
        assert ideals_equal(sq, make_ideal(R2, ("x^2", "x*y", "y^2")))

    def test_product_expansion(self):
        a = make_ideal(R4, ("X+W", "Y+W"))
        b = make_ideal(R4, ("Z+W",))
        prod = ideal_combine("product", a, b)
        expected = make_ideal(
            R4, ("X*Z + X*W + Z*W + W^2", "Y*Z + Y*W + Z*W + W^2")
        )
        assert prod.gens == expected.gens

    def test_ring_mismatch(self):
        with pytest.raises(ValueError):
            ideal_combine("sum", make_ideal(R2, ("x",)), make_ideal(R4, ("X",)))


class TestPower:
    def test_square_of_max(self):
        m = make_ideal(R2, ("x", "y"))
        assert ideals_equal(ideal_power(m, 2), make_ideal(R2, ("x^2", "x*y", "y^2")))

    def test_monomial_products(self):
        q = make_ideal(R2, ("x^2", "y^3"))
        assert ideals_equal(ideal_power(q, 2), make_ideal(R2, ("x^4", "x^2*y^3", "y^6")))

    def test_semigroup_vectors(self):
        _, q6 = plane_semigroup_job(6)
        sq = ideal_power(q6, 2)
        assert sorted(sq.gens) == [(12, 0), (12, 12), (12, 24)]

    def test_rejects_zeroth_power(self):
        with pytest.raises(ValueError):
            ideal_power(make_ideal(R2, ("x",)), 0)


class TestIntersect:
    def test_plane_coordinates(self):
        a = make_ideal(R4, ("X", "Y", "Z"))
        b = make_ideal(R4, ("W",))
        meet = ideal_intersect(a, b)
        assert ideals_equal(meet, make_ideal(R4, ("X*W", "Y*W", "Z*W")))

    def test_idempotent(self):
        a = make_ideal(R2, ("x",))
        assert ideals_equal(ideal_intersect(a, a), a)

    def test_coprime_monomials(self):
        a = make_ideal(R2, ("x^2",))
        b = make_ideal(R2, ("y",))
        assert ideals_equal(ideal_intersect(a, b), make_ideal(R2, ("x^2*y",)))


class TestColon:
    def test_socle_of_plane_point(self):
        q = make_ideal(R2, ("x^2", "y^3"))
        m = make_ideal(R2, ("x", "y"))
        colon = ideal_colon(q, m)
        assert ideals_equal(colon, make_ideal(R2, ("x^2", "x*y^2", "y^3")))
        assert not colon.unit

    def test_unit_flag(self):
        m = make_ideal(R2, ("x", "y"))
        colon = ideal_colon(m, m)
        assert colon.unit

    def test_quadric_cone_socle(self):
        ring = polynomial_ring(("x", "y", "z"), quotient=("z^2 - x*y",))
        q = make_ideal(ring, ("x", "y"))
        m = make_ideal(ring, ("x", "y", "z"))
        colon = ideal_colon(q, m)
        assert ideals_equal(colon, make_ideal(ring, ("x", "y", "z")))


class TestContainment:
    @pytest.mark.parametrize(
        "ring, q_srcs",
        [
            (R2, ("x^2", "y^3")),
            (polynomial_ring(("x", "y", "z"), quotient=("z^2 - x*y",)), ("x", "y")),
        ],
    )
    def test_colon_containments(self, ring, q_srcs):
        q = make_ideal(ring, q_srcs)
        m = make_ideal(ring, [parse_polynomial(v, ring) for v in ring.vars])
        colon = ideal_colon(q, m)
        # A is contained in A : B
        for g in q.gens:
            assert ideal_membership(ring, g, colon.gens)
        # (A : B) * B is contained in A
        prod = ideal_combine("product", colon, m)
        for g in prod.gens:
            assert ideal_membership(ring, g, q.gens)

    def test_colon_antitone_in_divisor(self):
        q = make_ideal(R2, ("x^2", "y^3"))
        small = make_ideal(R2, ("x",))
        big = make_ideal(R2, ("x", "y"))
        colon_small = ideal_colon(q, small)
        colon_big = ideal_colon(q, big)
        for g in colon_big.gens:
            assert ideal_membership(R2, g, colon_small.gens)


class TestPowerCoherence:
    def test_lengths_non_decreasing(self):
        ring = polynomial_ring(("x", "y", "z"), quotient=("z^2 - x*y",))
        q = make_ideal(ring, ("x", "y"))
        lengths = [quotient_length(ring, ideal_power(q, k).gens) for k in range(1, 5)]
        assert lengths == sorted(lengths)


class TestColonPowerCommutation:
    @pytest.mark.parametrize("a", [6, 7])
    def test_plane_semigroup_colon_powers(self, a):
        _, q = plane_semigroup_job(a)
        colon, _ = sg_colon_max(q)
        for n in range(4):
            power_then_colon, _ = sg_colon_max(ideal_power(q, n + 1))
            assert sg_length(ideal_power(colon, n + 1)) == sg_length(power_then_colon)
