"""The integer hull kernels against the LP route: same answers, different math."""

import random

import pytest

from latticecert.hull import affine_rank, lattice_hull
from latticecert.simplex import hull_membership


def random_points(rng, n, count, width=5):
    return sorted(
        {tuple(rng.randint(-width, width) for _ in range(n)) for _ in range(count)}
    )


def test_affine_rank():
    assert affine_rank([(0, 0, 0)]) == 0
    assert affine_rank([(0, 0, 0), (2, 0, 0)]) == 1
    assert affine_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0)]) == 2
    assert affine_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3
    assert affine_rank([(1, 1), (3, 3), (5, 5)]) == 1


def test_degenerate_inputs_fall_back():
    assert lattice_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]) is None
    assert lattice_hull([(0, 0), (5, 5)]) is None
    assert lattice_hull([(0, 0, 0, 0), (1, 0, 0, 0)]) is None


def test_one_dimensional_hull():
    h = lattice_hull([(3,), (0,), (7,)])
    assert h.vertices == frozenset({(0,), (7,)})
    assert h.contains((5,)) and not h.contains((8,))


@pytest.mark.parametrize("n", [2, 3])
def test_membership_agrees_with_lp(n):
    rng = random.Random(n * 77)
    checked = 0
    for _ in range(40):
        pts = random_points(rng, n, rng.randint(n + 1, 9))
        hull = lattice_hull(pts)
        if hull is None:
            continue
        for _ in range(12):
            q = tuple(rng.randint(-6, 6) for _ in range(n))
            assert hull.contains(q) == hull_membership(q, pts), (pts, q)
            checked += 1
    assert checked > 100


@pytest.mark.parametrize("n", [2, 3])
def test_vertex_set_agrees_with_lp_definition(n):
    rng = random.Random(n * 131)
    checked = 0
    for _ in range(30):
        pts = random_points(rng, n, rng.randint(n + 1, 8))
        hull = lattice_hull(pts)
        if hull is None:
            continue
        for p in pts:
            rest = [x for x in pts if x != p]
            is_vertex = not hull_membership(p, rest)
            assert (p in hull.vertices) == is_vertex, (pts, p)
            checked += 1
    assert checked > 60


def test_collinear_midpoints_are_not_vertices():
    h = lattice_hull([(0, 0), (1, 0), (2, 0), (0, 2)])
    assert h.vertices == frozenset({(0, 0), (2, 0), (0, 2)})


def test_facets_support_all_points():
    rng = random.Random(5)
    for _ in range(20):
        pts = random_points(rng, 3, 12)
        hull = lattice_hull(pts)
        if hull is None:
            continue
        for p in pts:
            assert hull.contains(p)
        batch = hull.contains_many([tuple(rng.randint(-6, 6) for _ in range(3)) for _ in range(8)])
        assert isinstance(batch, list)
