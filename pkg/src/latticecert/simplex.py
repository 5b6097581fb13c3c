"""Exact rational linear programming by two-phase primal simplex.

Free variables are split as x = x+ - x-, slacks turn rows into equations,
and rows with negative right-hand side get artificial variables for
phase 1.  Pivoting uses Bland's rule (smallest eligible column; ties in
the ratio test broken by smallest basic variable index), which guarantees
termination and makes every answer deterministic.

Unbounded problems return an explicit rational ray r with  a.r <= 0 for
every constraint and  objective.r < 0 for minimization, so callers can
certify unboundedness rather than trust a flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (
    DimensionMismatch,
    IntegerBox,
    LinearInequality,
    Polyhedron,
    Vector,
    as_vector,
    dot,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: Vector


@dataclass(frozen=True)
class Unbounded:
    ray: Vector


@dataclass(frozen=True)
class Infeasible:
    pass


LPResult = Optimal | Unbounded | Infeasible


def lp_solve(poly: Polyhedron, objective: Sequence, sense: str = "min") -> LPResult:
    """Exact optimum of objective.x over the polyhedron.

    ``sense`` is "min" or "max".  Maximization negates the objective and
    the reported value; the ray of an unbounded maximization satisfies
    objective.ray > 0.
    """
    obj = as_vector(objective)
    if len(obj) != poly.n:
        raise DimensionMismatch(
            f"objective of length {len(obj)} for a polyhedron in R^{poly.n}"
        )
    if sense == "max":
        res = lp_solve(poly, tuple(-c for c in obj), "min")
        if isinstance(res, Optimal):
            return Optimal(-res.value, res.point)
        return res
    if sense != "min":
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    if poly.n == 1:
        return _solve_1d(poly, obj[0])
    return _simplex_min(poly, obj)


def _solve_1d(poly: Polyhedron, c: Fraction) -> LPResult:
    # One variable: each row a*x <= b is a direct bound, no pivoting needed.
    lower = None
    upper = None
    for q in poly.ineqs:
        a = q.a[0]
        bound = q.beta / a
        if a > 0:
            upper = bound if upper is None else min(upper, bound)
        else:
            lower = bound if lower is None else max(lower, bound)
    if lower is not None and upper is not None and lower > upper:
        return Infeasible()
    if c > 0:
        if lower is None:
            return Unbounded((Fraction(-1),))
        return Optimal(c * lower, (lower,))
    if c < 0:
        if upper is None:
            return Unbounded((Fraction(1),))
        return Optimal(c * upper, (upper,))
    point = lower if lower is not None else (upper if upper is not None else _ZERO)
    return Optimal(_ZERO, (point,))


def _simplex_min(poly: Polyhedron, c: Vector) -> LPResult:
    n, m = poly.n, poly.m
    if m == 0:
        # No constraints: bounded only for the zero objective.
        if all(ci == 0 for ci in c):
            return Optimal(_ZERO, tuple([_ZERO] * n))
        ray = tuple(-ci for ci in c)
        return Unbounded(ray)

    # Columns: x+ (n) | x- (n) | slacks (m) | artificials (appended).
    width = 2 * n + m
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    for i, q in enumerate(poly.ineqs):
        flip = q.beta < 0
        sgn = -1 if flip else 1
        row = [_ZERO] * width
        for j, aj in enumerate(q.a):
            if aj != 0:
                row[j] = sgn * aj
                row[n + j] = -sgn * aj
        row[2 * n + i] = Fraction(sgn)
        row.append(sgn * q.beta)
        tab.append(row)
        if flip:
            art = len(art_cols)
            art_cols.append(width + art)
            basis.append(width + art)
        else:
            basis.append(2 * n + i)
    if art_cols:
        # Insert artificial columns before the rhs.
        for i, row in enumerate(tab):
            rhs = row.pop()
            ext = [_ZERO] * len(art_cols)
            if basis[i] >= width:
                ext[basis[i] - width] = _ONE
            row.extend(ext)
            row.append(rhs)
        total = width + len(art_cols)

        phase1_cost = [_ZERO] * total
        for col in range(width, total):
            phase1_cost[col] = _ONE
        red = _reduced_costs(tab, basis, phase1_cost)
        status = _pivot_loop(tab, basis, red, allowed_limit=total)
        if status is not None:
            raise AssertionError("phase 1 objective cannot be unbounded")
        value = sum(
            (tab[i][-1] for i in range(m) if basis[i] >= width), _ZERO
        )
        if value > 0:
            return Infeasible()
        _drive_out_artificials(tab, basis, width)
        # Rows whose basic variable is still artificial are redundant.
        keep = [i for i in range(len(tab)) if basis[i] < width]
        tab = [tab[i] for i in keep]
        basis = [basis[i] for i in keep]
        for row in tab:
            del row[width:-1]
    else:
        total = width

    phase2_cost = [_ZERO] * width
    for j in range(n):
        phase2_cost[j] = c[j]
        phase2_cost[n + j] = -c[j]
    red = _reduced_costs(tab, basis, phase2_cost)
    status = _pivot_loop(tab, basis, red, allowed_limit=width)
    if status is not None:
        enter = status
        direction = [_ZERO] * width
        direction[enter] = _ONE
        for i, row in enumerate(tab):
            if row[enter] != 0:
                direction[basis[i]] = -row[enter]
        ray = tuple(direction[j] - direction[n + j] for j in range(n))
        if all(r == 0 for r in ray):
            raise AssertionError("unbounded direction collapsed to zero in x-space")
        return Unbounded(ray)

    values = [_ZERO] * width
    for i, row in enumerate(tab):
        values[basis[i]] = row[-1]
    point = tuple(values[j] - values[n + j] for j in range(n))
    return Optimal(dot(c, point), point)


def _reduced_costs(tab, basis, cost):
    """Full reduced-cost row (with objective cell last), computed fresh."""
    ncols = len(cost)
    red = list(cost) + [_ZERO]
    for i, row in enumerate(tab):
        cb = cost[basis[i]]
        if cb != 0:
            for j in range(ncols):
                rj = row[j]
                if rj != 0:
                    red[j] -= cb * rj
            red[-1] -= cb * row[-1]
    return red


def _pivot_loop(tab, basis, red, allowed_limit):
    """Bland-rule pivoting to optimality.

    Returns None at optimality, or the entering column index if the
    problem is unbounded in that direction.
    """
    m = len(tab)
    while True:
        enter = -1
        for j in range(allowed_limit):
            if red[j] < 0:
                enter = j
                break
        if enter < 0:
            return None
        leave = -1
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return enter
        _pivot(tab, basis, red, leave, enter)


def _pivot(tab, basis, red, r, s):
    prow = tab[r]
    pv = prow[s]
    if pv != 1:
        inv = 1 / pv
        tab[r] = prow = [x * inv for x in prow]
    for i, row in enumerate(tab):
        if i == r:
            continue
        f = row[s]
        if f != 0:
            tab[i] = [x - f * p for x, p in zip(row, prow)]
    f = red[s]
    if f != 0:
        for j in range(len(red)):
            if prow[j] != 0:
                red[j] -= f * prow[j]
    basis[r] = s


def _drive_out_artificials(tab, basis, width):
    for i in range(len(tab)):
        if basis[i] >= width:
            row = tab[i]
            for j in range(width):
                if row[j] != 0:
                    _pivot(tab, basis, [_ZERO] * (len(row)), i, j)
                    break


@dataclass(frozen=True)
class BoxBounded:
    """Bounded in every coordinate. ``box`` is None when the real ranges
    contain no integer value at all (a feasible sliver between integers)."""

    box: IntegerBox | None


@dataclass(frozen=True)
class BoxUnbounded:
    lower: tuple[Fraction | None, ...]
    upper: tuple[Fraction | None, ...]
    rays: tuple[Vector, ...]


@dataclass(frozen=True)
class BoxInfeasible:
    pass


BoxResult = BoxBounded | BoxUnbounded | BoxInfeasible


def bounding_box(poly: Polyhedron) -> BoxResult:
    """Integer bounding box via 2n coordinate LPs, rounded inward.

    Infeasibility is reported as its own tag, not an error: certificate
    search legitimately probes infeasible subsystems.
    """
    lows: list[Fraction | None] = []
    highs: list[Fraction | None] = []
    rays: list[Vector] = []
    for j in range(poly.n):
        obj = [_ZERO] * poly.n
        obj[j] = _ONE
        lo = lp_solve(poly, obj, "min")
        if isinstance(lo, Infeasible):
            return BoxInfeasible()
        if isinstance(lo, Unbounded):
            lows.append(None)
            rays.append(lo.ray)
        else:
            lows.append(lo.value)
        hi = lp_solve(poly, obj, "max")
        if isinstance(hi, Infeasible):
            return BoxInfeasible()
        if isinstance(hi, Unbounded):
            highs.append(None)
            rays.append(hi.ray)
        else:
            highs.append(hi.value)
    if rays:
        return BoxUnbounded(tuple(lows), tuple(highs), tuple(rays))
    lo_int = [math.ceil(v) for v in lows]
    hi_int = [math.floor(v) for v in highs]
    if any(a > b for a, b in zip(lo_int, hi_int)):
        return BoxBounded(None)
    return BoxBounded(IntegerBox(tuple(lo_int), tuple(hi_int)))


def hull_membership(q: Sequence, points: Sequence[Sequence]) -> bool:
    """Is q a convex combination of the given points?  Exact LP feasibility.

    The barycentric system (sum lambda_i = 1, sum lambda_i x_i = q,
    lambda >= 0) is posed with equalities split into inequality pairs and
    fed to the simplex with a zero objective.
    """
    if len(points) == 0:
        raise ValueError("membership query against an empty point set")
    qv = as_vector(q)
    n = len(qv)
    k = len(points)
    cols = [as_vector(p) for p in points]
    for p in cols:
        if len(p) != n:
            raise DimensionMismatch("hull points and query point disagree in length")
    rows: list[LinearInequality] = []
    for i in range(k):
        e = [_ZERO] * k
        e[i] = Fraction(-1)
        rows.append(LinearInequality(tuple(e), _ZERO))
    ones = tuple([_ONE] * k)
    rows.append(LinearInequality(ones, _ONE))
    rows.append(LinearInequality(tuple([-_ONE] * k), -_ONE))
    for j in range(n):
        coeffs = tuple(cols[i][j] for i in range(k))
        if all(c == 0 for c in coeffs):
            # Every candidate point has coordinate j equal to zero, so the
            # equality 0 = q_j either holds trivially or is unsatisfiable.
            if qv[j] != 0:
                return False
            continue
        rows.append(LinearInequality(coeffs, qv[j]))
        rows.append(LinearInequality(tuple(-c for c in coeffs), -qv[j]))
    lp = Polyhedron(k, tuple(rows))
    res = lp_solve(lp, [_ZERO] * k, "min")
    return isinstance(res, Optimal)
