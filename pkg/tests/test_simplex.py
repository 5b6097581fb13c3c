import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latticecert.geometry import Polyhedron, Relation
from latticecert.simplex import (
    BoxBounded,
    BoxInfeasible,
    BoxUnbounded,
    Infeasible,
    Optimal,
    Unbounded,
    bounding_box,
    hull_membership,
    lp_solve,
)

from conftest import (
    box_polyhedron,
    caratheodory_membership,
    ineq,
    random_bounded_polyhedron,
    vertex_oracle_minimum,
)


def test_min_on_segment():
    poly = Polyhedron(1, (ineq([-1], 0), ineq([1], 3)))
    res = lp_solve(poly, [1], "min")
    assert res == Optimal(Fraction(0), (Fraction(0),))


def test_unbounded_with_certified_ray():
    poly = Polyhedron(1, (ineq([-1], 0),))
    res = lp_solve(poly, [-1], "min")
    assert isinstance(res, Unbounded)
    ray = res.ray
    assert all(sum(a * r for a, r in zip(q.a, ray)) <= 0 for q in poly.ineqs)
    assert sum(c * r for c, r in zip((-1,), ray)) < 0


def test_infeasible():
    poly = Polyhedron(1, (ineq([1], 0), ineq([-1], -1)))
    assert lp_solve(poly, [1], "min") == Infeasible()


def test_max_negates_properly():
    poly = box_polyhedron(2, 0, 3)
    res = lp_solve(poly, [1, 2], "max")
    assert isinstance(res, Optimal)
    assert res.value == 9


def test_optimal_point_feasible_and_value_exact(rng):
    for _ in range(60):
        poly = random_bounded_polyhedron(rng, rng.randint(1, 3), rng.randint(0, 4))
        obj = [Fraction(rng.randint(-3, 3)) for _ in range(poly.n)]
        res = lp_solve(poly, obj, "min")
        if isinstance(res, Infeasible):
            continue
        assert isinstance(res, Optimal)
        assert poly.contains(res.point)
        assert sum(c * x for c, x in zip(obj, res.point)) == res.value


def test_agrees_with_vertex_oracle(rng):
    hits = 0
    for _ in range(80):
        n = rng.randint(1, 3)
        poly = random_bounded_polyhedron(rng, n, rng.randint(0, 8 - 2 * n))
        obj = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        res = lp_solve(poly, obj, "min")
        oracle = vertex_oracle_minimum(poly, obj)
        if isinstance(res, Infeasible):
            assert oracle is None
        else:
            assert isinstance(res, Optimal)
            assert oracle == res.value
            hits += 1
    assert hits > 20


class TestBoundingBox:
    def test_unit_square(self):
        from latticecert.geometry import IntegerBox

        bb = bounding_box(box_polyhedron(2, 0, 1))
        assert bb == BoxBounded(box=IntegerBox((0, 0), (1, 1)))

    def test_strip_is_unbounded(self):
        strip = Polyhedron(
            2, (ineq([1, 0], Fraction(3, 4)), ineq([-1, 0], Fraction(-1, 4)))
        )
        bb = bounding_box(strip)
        assert isinstance(bb, BoxUnbounded)
        assert bb.lower[1] is None and bb.upper[1] is None

    def test_triangle_rounds_inward(self):
        tri = Polyhedron(
            2,
            (ineq([-1, 0], 0), ineq([0, -1], 0), ineq([1, 1], Fraction(5, 2))),
        )
        bb = bounding_box(tri)
        assert isinstance(bb, BoxBounded)
        assert bb.box.lower == (0, 0) and bb.box.upper == (2, 2)

    def test_infeasible_tag(self):
        poly = Polyhedron(1, (ineq([1], 0), ineq([-1], -1)))
        assert bounding_box(poly) == BoxInfeasible()

    def test_no_integer_sliver(self):
        sliver = Polyhedron(
            1, (ineq([1], Fraction(3, 4)), ineq([-1], Fraction(-1, 4)))
        )
        bb = bounding_box(sliver)
        assert bb == BoxBounded(box=None)


class TestHullMembership:
    def test_square_examples(self):
        square = [(0, 0), (2, 0), (0, 2), (2, 2)]
        assert hull_membership((1, 1), square)
        assert not hull_membership((3, 0), square)
        assert hull_membership((1, 0), [(0, 0), (2, 0)])

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            hull_membership((0,), [])

    def test_agrees_with_caratheodory_oracle(self, rng):
        for _ in range(60):
            n = rng.randint(1, 3)
            pts = [
                tuple(rng.randint(-3, 3) for _ in range(n))
                for _ in range(rng.randint(1, 6))
            ]
            q = tuple(rng.randint(-3, 3) for _ in range(n))
            assert hull_membership(q, pts) == caratheodory_membership(q, pts)
