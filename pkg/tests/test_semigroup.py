import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import plane_semigroup_job
from oracles import semigroup_members_in_box
from sgenus.errors import NotCofinite
from sgenus.idealops import ideal_power
from sgenus.semigroup import (
    AffineSemigroup,
    SemigroupIdeal,
    sg_closure_gap,
    sg_colon_max,
    sg_complement,
    sg_length,
    sg_membership,
)

PLANE_GENS = [(1, 0), (1, 2), (2, 3), (3, 1)]


@pytest.fixture(scope="module")
def S():
    return AffineSemigroup(2, PLANE_GENS)


class TestMembership:
    def test_identity(self, S):
        assert sg_membership(S, (0, 0))

    def test_gap_point(self, S):
        assert not sg_membership(S, (1, 1))

    def test_sum_of_generators(self, S):
        assert sg_membership(S, (2, 2))

    def test_dimension_mismatch(self, S):
        with pytest.raises(ValueError):
            sg_membership(S, (1, 2, 3))

    def test_against_exhaustive_enumeration(self, S):
        box = (9, 18)
        members = semigroup_members_in_box(PLANE_GENS, box)
        for x in range(box[0] + 1):
            for y in range(box[1] + 1):
                assert sg_membership(S, (x, y)) == ((x, y) in members)

    @settings(max_examples=40)
    @given(
        st.tuples(st.integers(0, 12), st.integers(0, 24)),
        st.tuples(st.integers(0, 12), st.integers(0, 24)),
    )
    def test_closed_under_addition(self, v, w):
        S = AffineSemigroup(2, PLANE_GENS)
        if sg_membership(S, v) and sg_membership(S, w):
            assert sg_membership(S, tuple(a + b for a, b in zip(v, w)))


class TestLength:
    def test_numerical_semigroup(self):
        S1 = AffineSemigroup(1, [(1,)])
        assert sg_length(SemigroupIdeal(S1, [(5,)])) == 5

    def test_plane_parameter_ideal(self, S):
        assert sg_length(SemigroupIdeal(S, [(6, 0), (6, 12)])) == 74

    def test_plane_colon_ideal(self, S):
        colon, _ = sg_colon_max(SemigroupIdeal(S, [(6, 0), (6, 12)]))
        assert sg_length(colon) == 70

    @pytest.mark.parametrize("a", [6, 7, 8])
    def test_closed_forms_for_powers(self, S, a):
        q = SemigroupIdeal(S, [(a, 0), (a, 2 * a)])
        colon, _ = sg_colon_max(q)
        for n in range(4):
            assert sg_length(ideal_power(q, n + 1)) == 2 * a * a * comb(n + 2, 2) + 2 * (
                n + 1
            )
            assert (
                sg_length(ideal_power(colon, n + 1))
                == 2 * a * a * comb(n + 2, 2) - (n + 1) - 1
            )

    def test_not_cofinite(self):
        grid = AffineSemigroup(2, [(1, 0), (0, 1)], box_cap=128)
        with pytest.raises(NotCofinite):
            sg_length(SemigroupIdeal(grid, [(1, 0)]))

    def test_dim3_box(self):
        S3 = AffineSemigroup(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        ideal = SemigroupIdeal(S3, [(2, 0, 0), (0, 3, 0), (0, 0, 2)])
        assert sg_length(ideal) == 2 * 3 * 2

    def test_generator_outside_semigroup_rejected(self, S):
        with pytest.raises(ValueError):
            SemigroupIdeal(S, [(1, 1)])


class TestColonMax:
    def test_socle_points(self, S):
        _, socle = sg_colon_max(SemigroupIdeal(S, [(6, 0), (6, 12)]))
        assert sorted(socle) == [(8, 1), (8, 13), (10, 10), (11, 11)]

    def test_socle_size_is_index_of_reducibility(self, S):
        q = SemigroupIdeal(S, [(6, 0), (6, 12)])
        colon, socle = sg_colon_max(q)
        assert len(socle) == 4
        assert sg_length(q) - sg_length(colon) == len(socle)

    def test_numerical_socle(self):
        S1 = AffineSemigroup(1, [(1,)])
        colon, socle = sg_colon_max(SemigroupIdeal(S1, [(5,)]))
        assert socle == [(4,)]
        assert colon.gens == ((4,),)

    @pytest.mark.parametrize(
        "gens, ideal",
        [
            (PLANE_GENS, [(6, 0), (6, 12)]),
            (PLANE_GENS, [(7, 0), (7, 14)]),
            ([(3,), (4,), (5,)], [(6,)]),
            ([(2,), (3,)], [(4,)]),
        ],
    )
    def test_length_drop_equals_socle_size(self, gens, ideal):
        S = AffineSemigroup(len(gens[0]), gens)
        q = SemigroupIdeal(S, ideal)
        colon, socle = sg_colon_max(q)
        assert sg_length(colon) == sg_length(q) - len(socle)


class TestClosureGap:
    def test_plane_semigroup_gap(self, S):
        assert sg_closure_gap(S) == [(1, 1), (2, 1)]

    def test_saturated_grid(self):
        assert sg_closure_gap(AffineSemigroup(2, [(1, 0), (0, 1)])) == []

    def test_index_two_lattice(self):
        # group is the even-second-coordinate lattice; no gaps inside it
        assert sg_closure_gap(AffineSemigroup(2, [(1, 0), (1, 2)])) == []

    def test_single_ray_rejected(self):
        with pytest.raises(ValueError):
            sg_closure_gap(AffineSemigroup(2, [(1, 1), (2, 2)]))

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValueError):
            sg_closure_gap(AffineSemigroup(1, [(2,), (3,)]))

    def test_gap_points_are_outside_but_in_group(self, S):
        members = semigroup_members_in_box(PLANE_GENS, (8, 16))
        for v in sg_closure_gap(S):
            assert v not in members
            assert v[1] <= 2 * v[0]


class TestComplement:
    def test_complement_matches_enumeration(self, S):
        q = SemigroupIdeal(S, [(4, 0), (4, 8)])
        outside = set(sg_complement(q))
        members = semigroup_members_in_box(PLANE_GENS, (16, 32))
        for x in range(13):
            for y in range(2 * x + 1):
                v = (x, y)
                in_ideal = any(
                    all(a >= b for a, b in zip(v, g))
                    and tuple(a - b for a, b in zip(v, g)) in members
                    for g in q.gens
                )
                expected = v in members and not in_ideal
                assert ((x, y) in outside) == expected

    def test_random_numerical_ideals(self):
        rng = random.Random(11)
        for _ in range(10):
            gens = sorted({rng.randint(2, 7) for _ in range(rng.randint(2, 3))})
            S1 = AffineSemigroup(1, [(g,) for g in gens])
            members = semigroup_members_in_box([(g,) for g in gens], (120,))
            c = rng.randint(2, 4) * gens[0]
            if (c,) not in members:
                continue
            ideal = SemigroupIdeal(S1, [(c,)])
            expected = sum(
                1
                for x in range(121)
                if (x,) in members
                and not (x >= c and (x - c,) in members)
            )
            assert sg_length(ideal) == expected
