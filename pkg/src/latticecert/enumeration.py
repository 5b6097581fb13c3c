"""Enumerate or count the integer points of a rational polyhedron.

Bounded systems are enumerated exactly by coordinate branching: the range
of x1 comes from two LPs, each integer value is substituted, and the
reduced system recurses.  Output order is lexicographic.

Unbounded systems get an honest three-way answer.  If an integer point is
found inside a margin-extended search box, it is returned together with
an integer recession ray; point + t*ray is feasible for every t >= 0, so
the pair certifies infinitely many integer points.  If the search box is
exhausted without a hit, the outcome is inconclusive (deciding integer
feasibility of unbounded systems is outside this package's scope) and the
searched box is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .geometry import (
    IntegerBox,
    LinearInequality,
    Polyhedron,
    PostconditionError,
    dot,
)
from .simplex import (
    BoxBounded,
    BoxInfeasible,
    BoxUnbounded,
    Infeasible,
    Optimal,
    Unbounded,
    bounding_box,
    lp_solve,
)

DEFAULT_CAP = 10**6

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class LatticePointSet:
    """A duplicate-free set of integer points in canonical (lex) order."""

    points: tuple[IntPoint, ...]

    def __post_init__(self):
        canon = sorted({tuple(int(c) for c in p) for p in self.points})
        object.__setattr__(self, "points", tuple(canon))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in set(self.points)

    def to_json_list(self) -> list[list[int]]:
        return [list(p) for p in self.points]


@dataclass(frozen=True)
class Exact:
    points: LatticePointSet


@dataclass(frozen=True)
class CapExceeded:
    cap: int


@dataclass(frozen=True)
class UnboundedWithWitness:
    point: IntPoint
    ray: IntPoint


@dataclass(frozen=True)
class UnboundedInconclusive:
    searched: IntegerBox


EnumOutcome = Exact | CapExceeded | UnboundedWithWitness | UnboundedInconclusive


@dataclass(frozen=True)
class ExactCount:
    count: int


@dataclass(frozen=True)
class MoreThan:
    cap: int


@dataclass(frozen=True)
class InfiniteWitnessed:
    point: IntPoint
    ray: IntPoint


@dataclass(frozen=True)
class Inconclusive:
    searched: IntegerBox


CountOutcome = ExactCount | MoreThan | InfiniteWitnessed | Inconclusive

Row = tuple[tuple[Fraction, ...], Fraction]


def _live_rows(rows: list[Row]) -> list[Row] | None:
    """Drop rows whose normal vanished; None when a constant row fails."""
    out = []
    for coeffs, rhs in rows:
        if any(c != 0 for c in coeffs):
            out.append((coeffs, rhs))
        elif rhs < 0:
            return None
    return out


def _first_var_range(
    rows: list[Row], nvars: int, clamp: tuple[int, int] | None
) -> tuple[int, int] | None:
    """Integer range of the first remaining variable over the reduced system."""
    if nvars == 1:
        lower = None
        upper = None
        for coeffs, rhs in rows:
            a = coeffs[0]
            bound = rhs / a
            if a > 0:
                upper = bound if upper is None else min(upper, bound)
            else:
                lower = bound if lower is None else max(lower, bound)
        lo = None if lower is None else math.ceil(lower)
        hi = None if upper is None else math.floor(upper)
    elif rows:
        poly = Polyhedron(nvars, tuple(LinearInequality(c, r) for c, r in rows))
        obj = [Fraction(0)] * nvars
        obj[0] = Fraction(1)
        res = lp_solve(poly, obj, "min")
        if isinstance(res, Infeasible):
            return None
        lo = math.ceil(res.value) if isinstance(res, Optimal) else None
        res = lp_solve(poly, obj, "max")
        hi = math.floor(res.value) if isinstance(res, Optimal) else None
    else:
        lo = None
        hi = None
    if clamp is not None:
        lo = clamp[0] if lo is None else max(lo, clamp[0])
        hi = clamp[1] if hi is None else min(hi, clamp[1])
    if lo is None or hi is None:
        raise AssertionError("unbounded variable range while enumerating")
    if lo > hi:
        return None
    return lo, hi


def _branch(
    rows: list[Row],
    nvars: int,
    depth: int,
    clamps: Sequence[tuple[int, int]] | None,
    prefix: tuple[int, ...],
) -> Iterator[IntPoint]:
    live = _live_rows(rows)
    if live is None:
        return
    clamp = clamps[depth] if clamps is not None else None
    rng = _first_var_range(live, nvars, clamp)
    if rng is None:
        return
    lo, hi = rng
    if nvars == 1:
        for v in range(lo, hi + 1):
            yield prefix + (v,)
        return
    for v in range(lo, hi + 1):
        sub = [(coeffs[1:], rhs - coeffs[0] * v) for coeffs, rhs in live]
        yield from _branch(sub, nvars - 1, depth + 1, clamps, prefix + (v,))


def iter_lattice_points(
    poly: Polyhedron, clamps: Sequence[tuple[int, int]] | None = None
) -> Iterator[IntPoint]:
    """Stream feasible integer points in lexicographic order.

    The polyhedron must be bounded unless per-coordinate clamps restrict
    the search; every yielded point exactly satisfies every inequality.
    """
    rows = [(q.a, q.beta) for q in poly.ineqs]
    yield from _branch(rows, poly.n, 0, clamps, ())


def integer_ray(ray: Sequence[Fraction]) -> IntPoint:
    """Scale a rational recession direction to a primitive integer vector."""
    denom = math.lcm(*(Fraction(c).denominator for c in ray))
    ints = [int(Fraction(c) * denom) for c in ray]
    g = math.gcd(*(abs(v) for v in ints))
    if g == 0:
        raise ValueError("zero ray cannot be scaled")
    return tuple(v // g for v in ints)


def _search_box(
    info: BoxUnbounded, n: int, margin_min: int, margin_factor: int
) -> IntegerBox:
    extents = []
    for lo, hi in zip(info.lower, info.upper):
        if lo is not None and hi is not None:
            extents.append(math.ceil(hi) - math.floor(lo))
    margin = max(margin_min, margin_factor * max(extents, default=0))
    lows = []
    highs = []
    for lo, hi in zip(info.lower, info.upper):
        # Outward rounding: the search box is a candidate region, and the
        # exact membership test inside the branching rejects outsiders.
        ilo = None if lo is None else math.floor(lo)
        ihi = None if hi is None else math.ceil(hi)
        if ilo is not None and ihi is not None:
            lows.append(ilo)
            highs.append(ihi)
        elif ilo is not None:
            lows.append(ilo)
            highs.append(ilo + margin)
        elif ihi is not None:
            lows.append(ihi - margin)
            highs.append(ihi)
        else:
            lows.append(-margin)
            highs.append(margin)
    return IntegerBox(tuple(lows), tuple(highs))


def enumerate_points(
    poly: Polyhedron,
    cap: int = DEFAULT_CAP,
    strict: bool = False,
    margin_min: int = 50,
    margin_factor: int = 10,
) -> EnumOutcome:
    """All integer points of the polyhedron, or a witness of why not.

    ``strict`` keeps only points strictly inside every inequality (the
    relative-interior variant); the cap counts kept points.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    bb = bounding_box(poly)
    if isinstance(bb, BoxInfeasible):
        return Exact(LatticePointSet(()))
    if isinstance(bb, BoxUnbounded):
        box = _search_box(bb, poly.n, margin_min, margin_factor)
        clamps = list(zip(box.lower, box.upper))
        for p in iter_lattice_points(poly, clamps):
            if strict and not poly.strictly_contains(p):
                continue
            ray = integer_ray(bb.rays[0])
            for q in poly.ineqs:
                if dot(q.a, ray) > 0:
                    raise PostconditionError(
                        f"recession ray {ray} leaves constraint {q}"
                    )
            return UnboundedWithWitness(p, ray)
        return UnboundedInconclusive(box)
    if bb.box is None:
        return Exact(LatticePointSet(()))
    found: list[IntPoint] = []
    for p in iter_lattice_points(poly):
        if strict and not poly.strictly_contains(p):
            continue
        found.append(p)
        if len(found) > cap:
            return CapExceeded(cap)
    return Exact(LatticePointSet(tuple(found)))


def interior_integer_points(poly: Polyhedron, cap: int = DEFAULT_CAP) -> EnumOutcome:
    """Integer points strictly satisfying every inequality."""
    return enumerate_points(poly, cap=cap, strict=True)


def count_points(poly: Polyhedron, cap: int = DEFAULT_CAP) -> CountOutcome:
    """Cardinality information only; same decision procedure as enumerate."""
    outcome = enumerate_points(poly, cap=cap)
    if isinstance(outcome, Exact):
        return ExactCount(len(outcome.points))
    if isinstance(outcome, CapExceeded):
        return MoreThan(outcome.cap)
    if isinstance(outcome, UnboundedWithWitness):
        return InfiniteWitnessed(outcome.point, outcome.ray)
    return Inconclusive(outcome.searched)
