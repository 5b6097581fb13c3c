from fractions import Fraction

import pytest

from latticecert.enumeration import (
    CapExceeded,
    Exact,
    ExactCount,
    InfiniteWitnessed,
    LatticePointSet,
    MoreThan,
    UnboundedInconclusive,
    UnboundedWithWitness,
    count_points,
    enumerate_points,
    integer_ray,
    interior_integer_points,
)
from latticecert.geometry import Polyhedron
from latticecert.witness import build_witness

from conftest import box_polyhedron, brute_points_in_box, ineq, random_bounded_polyhedron

W2_POINTS = [(-1, 0), (-1, 1), (0, -1), (0, 0), (0, 1), (1, -1), (1, 0)]


def test_unit_square():
    out = enumerate_points(box_polyhedron(2, 0, 1), cap=100)
    assert isinstance(out, Exact)
    assert list(out.points) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_strip_is_inconclusive():
    strip = Polyhedron(
        2, (ineq([1, 0], Fraction(3, 4)), ineq([-1, 0], Fraction(-1, 4)))
    )
    out = enumerate_points(strip, cap=100)
    assert isinstance(out, UnboundedInconclusive)


def test_witness_polytope_points():
    out = enumerate_points(build_witness(2).poly, cap=100)
    assert isinstance(out, Exact)
    assert list(out.points) == sorted(W2_POINTS)
    # frozen from the brute-force oracle over [-2,2]^2
    oracle = brute_points_in_box(build_witness(2).poly, -2, 2)
    assert list(out.points) == oracle


def test_halfline_witness():
    out = enumerate_points(Polyhedron(1, (ineq([-1], 0),)), cap=10)
    assert out == UnboundedWithWitness(point=(0,), ray=(1,))


def test_witness_ray_walks_inside():
    poly = Polyhedron(2, (ineq([-1, 0], 0), ineq([0, -1], 0), ineq([-1, -1], 5)))
    out = enumerate_points(poly, cap=10)
    assert isinstance(out, UnboundedWithWitness)
    for t in range(4):
        shifted = tuple(p + t * r for p, r in zip(out.point, out.ray))
        assert poly.contains(shifted)


class TestCounting:
    def test_square(self):
        assert count_points(box_polyhedron(2, 0, 1)) == ExactCount(4)

    def test_w3(self):
        assert count_points(build_witness(3).poly) == ExactCount(15)

    def test_four_by_four(self):
        assert count_points(box_polyhedron(2, 0, 3)) == ExactCount(16)

    def test_more_than(self):
        assert count_points(box_polyhedron(2, 0, 3), cap=5) == MoreThan(5)

    def test_infinite_witnessed(self):
        out = count_points(Polyhedron(1, (ineq([-1], 0),)), cap=10)
        assert isinstance(out, InfiniteWitnessed)


class TestInterior:
    def test_square_center(self):
        out = interior_integer_points(box_polyhedron(2, 0, 2))
        assert list(out.points) == [(1, 1)]

    def test_witness_origin_only(self):
        out = interior_integer_points(build_witness(2).poly)
        assert list(out.points) == [(0, 0)]

    def test_unit_square_empty(self):
        out = interior_integer_points(box_polyhedron(2, 0, 1))
        assert list(out.points) == []

    def test_interior_contained_in_full(self, rng):
        for _ in range(25):
            poly = random_bounded_polyhedron(rng, rng.randint(1, 3), rng.randint(0, 3))
            full = enumerate_points(poly, cap=5000)
            inner = interior_integer_points(poly, cap=5000)
            if not (isinstance(full, Exact) and isinstance(inner, Exact)):
                continue
            full_set = set(full.points)
            inner_set = set(inner.points)
            assert inner_set <= full_set
            boundary = {p for p in full_set if poly.tight_rows(p)}
            assert inner_set == full_set - boundary


def test_cap_behaviour():
    assert enumerate_points(box_polyhedron(2, 0, 3), cap=5) == CapExceeded(5)
    with pytest.raises(ValueError):
        enumerate_points(box_polyhedron(1, 0, 1), cap=0)


def test_matches_brute_force_oracle(rng):
    for _ in range(40):
        poly = random_bounded_polyhedron(rng, rng.randint(1, 3), rng.randint(0, 4))
        out = enumerate_points(poly, cap=10**5)
        assert isinstance(out, Exact)
        assert list(out.points) == brute_points_in_box(poly, -10, 10)


def test_output_is_lexicographic_and_duplicate_free(rng):
    for _ in range(10):
        poly = random_bounded_polyhedron(rng, 2, 3)
        out = enumerate_points(poly)
        pts = list(out.points)
        assert pts == sorted(set(pts))


def test_infeasible_gives_empty():
    poly = Polyhedron(1, (ineq([1], 0), ineq([-1], -1)))
    assert enumerate_points(poly) == Exact(LatticePointSet(()))


def test_integer_ray_scaling():
    assert integer_ray((Fraction(2, 3), Fraction(-1, 2))) == (4, -3)
    assert integer_ray((Fraction(4), Fraction(-2))) == (2, -1)
    with pytest.raises(ValueError):
        integer_ray((Fraction(0), Fraction(0)))


def test_lattice_point_set_serialization():
    s = LatticePointSet(((1, 2), (0, 5), (1, 2)))
    assert s.to_json_list() == [[0, 5], [1, 2]]
    assert (0, 5) in s and (9, 9) not in s
