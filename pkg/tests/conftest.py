import pathlib

import pytest

from sgenus import (
    AffineSemigroup,
    SemigroupIdeal,
    make_ideal,
    polynomial_ring,
    semigroup_ring,
)

SPECS = pathlib.Path(__file__).resolve().parent.parent / "specs"


@pytest.fixture
def specs_dir():
    return SPECS


@pytest.fixture
def plane_semigroup():
    return AffineSemigroup(2, [(1, 0), (1, 2), (2, 3), (3, 1)])


def plane_semigroup_job(a):
    ring = semigroup_ring(2, [(1, 0), (1, 2), (2, 3), (3, 1)])
    S = AffineSemigroup(ring.sg_dim, ring.sg_gens)
    q = SemigroupIdeal(S, [(a, 0), (a, 2 * a)])
    return ring, q


def quadric_cone_job():
    ring = polynomial_ring(("x", "y", "z"), quotient=("z^2 - x*y",))
    return ring, make_ideal(ring, ("x", "y"))


def hyperplane_line_job(deep=False):
    ring = polynomial_ring(("X", "Y", "Z", "W"), quotient=("X*W", "Y*W", "Z*W"))
    if deep:
        gens = ("X^2+W^2", "Y^2+W^2", "Z^2+W^2")
    else:
        gens = ("X+W", "Y+W", "Z+W")
    return ring, make_ideal(ring, gens)


def regular_plane_job():
    ring = polynomial_ring(("x", "y"))
    return ring, make_ideal(ring, ("x^2", "y^3"))


def embedded_point_job(deep=True):
    ring = polynomial_ring(("x", "y", "z"), quotient=("z^2", "z*x", "z*y"))
    gens = ("x^3", "y^3") if deep else ("x", "y")
    return ring, make_ideal(ring, gens)


def numerical_345_job():
    ring = semigroup_ring(1, [(3,), (4,), (5,)])
    S = AffineSemigroup(1, ring.sg_gens)
    return ring, SemigroupIdeal(S, [(6,)])
