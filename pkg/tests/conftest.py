"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they check: brute
force over boxes, vertex enumeration through square subsystems, and
barycentric solves by Gaussian elimination.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from latticecert.geometry import LinearInequality, Polyhedron


def ineq(coeffs, rhs) -> LinearInequality:
    return LinearInequality(tuple(Fraction(c) for c in coeffs), Fraction(rhs))


def box_polyhedron(n: int, lo, hi, extra=()) -> Polyhedron:
    rows = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        rows.append(LinearInequality(tuple(e), Fraction(hi)))
        rows.append(LinearInequality(tuple(-c for c in e), Fraction(-lo)))
    return Polyhedron(n, tuple(rows) + tuple(extra))


def brute_points_in_box(poly: Polyhedron, lo: int, hi: int) -> list[tuple[int, ...]]:
    return sorted(
        p
        for p in itertools.product(range(lo, hi + 1), repeat=poly.n)
        if poly.contains(p)
    )


def solve_square(rows, rhs):
    """Exact solution of a square linear system, or None when singular."""
    n = len(rhs)
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def vertex_oracle_minimum(poly: Polyhedron, objective):
    """Minimum of the objective over all feasible basic points.

    Sound for bounded nonempty polyhedra, where the optimum sits at a
    vertex defined by n tight rows.
    """
    best = None
    for subset in itertools.combinations(range(poly.m), poly.n):
        rows = [poly.ineqs[i].a for i in subset]
        rhs = [poly.ineqs[i].beta for i in subset]
        point = solve_square(rows, rhs)
        if point is None or not poly.contains(point):
            continue
        value = sum(c * x for c, x in zip(objective, point))
        if best is None or value < best:
            best = value
    return best


def caratheodory_membership(q, points) -> bool:
    """Is q in conv(points)?  Checks all affinely independent subsets of
    size at most n+1 for nonnegative barycentric coordinates."""
    n = len(q)
    for size in range(1, n + 2):
        for subset in itertools.combinations(points, size):
            # Solve sum l_i x_i = q, sum l_i = 1 by augmenting with ones.
            cols = [tuple(p) + (Fraction(1),) for p in subset]
            target = tuple(Fraction(c) for c in q) + (Fraction(1),)
            sol = _solve_least_square_exact(cols, target)
            if sol is not None and all(l >= 0 for l in sol):
                return True
    return False


def _solve_least_square_exact(cols, target):
    """Solve sum_i l_i cols[i] = target exactly if the system is
    consistent with a unique solution; None otherwise."""
    rows = len(target)
    k = len(cols)
    a = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(rows)]
    piv_rows = []
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pivot is None:
            return None  # dependent subset; a smaller one covers this case
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_rows.append(r)
        r += 1
    for i in range(r, rows):
        if a[i][k] != 0:
            return None  # inconsistent
    return tuple(a[i][k] for i in range(k))


def random_bounded_polyhedron(rng: random.Random, n: int, extra_rows: int) -> Polyhedron:
    """A bounded rational polyhedron: a box plus random cutting rows."""
    lo = rng.randint(-3, 0)
    hi = rng.randint(1, 4)
    rows = []
    for _ in range(extra_rows):
        coeffs = [Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2])) for _ in range(n)]
        if all(c == 0 for c in coeffs):
            coeffs[rng.randrange(n)] = Fraction(1)
        rhs = Fraction(rng.randint(-2, 8), rng.choice([1, 2]))
        rows.append(LinearInequality(tuple(coeffs), rhs))
    return box_polyhedron(n, lo, hi, tuple(rows))


@pytest.fixture
def rng():
    return random.Random(20260809)
