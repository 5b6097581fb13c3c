"""The tight lower-bound polytope for the one-interior-point case.

``build_witness(n)`` constructs a polytope W_n with 2(2^n - 1) facets
whose only interior integer point is the origin and whose every facet
carries exactly one feasible integer point in its relative interior.
Dropping any single inequality therefore admits an extra interior integer
point, so no row is redundant: the minimal certificate of W_n at k = 1
has size exactly 2(2^n - 1), matching the closed-form bound.

Rows come in four families.  For each coordinate j there is a "geometric
ladder" row (coefficients 1/2^i before j, 1 at j, 1/2^(i-1) after) and
its negation.  For each subset N of coordinates with |N| >= 2 there is a
row with -1/|N| on the least element of N, +1/|N| on the rest of N and
-1/|N|^n outside, and its negation.  All right-hand sides are 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable

from .enumeration import (
    CapExceeded,
    Exact,
    LatticePointSet,
    UnboundedWithWitness,
    enumerate_points,
)
from .geometry import LinearInequality, Polyhedron, Relation

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class WitnessTag:
    """Provenance of one witness row: family kind plus its j or subset N."""

    kind: str  # "type1" | "type2" | "type3" | "type4"
    j: int | None = None
    subset: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.j is not None:
            d["j"] = self.j
        if self.subset is not None:
            d["subset"] = list(self.subset)
        return d


@dataclass(frozen=True)
class WitnessPolytope:
    n: int
    poly: Polyhedron
    tags: tuple[WitnessTag, ...]


@dataclass(frozen=True)
class VerificationReport:
    interior_ok: bool
    facet_tight_ok: bool
    removal_ok: bool
    tight_point_per_facet: dict[int, IntPoint]
    details: dict

    @property
    def all_ok(self) -> bool:
        return self.interior_ok and self.facet_tight_ok and self.removal_ok

    def to_json_dict(self) -> dict:
        return {
            "interior_ok": self.interior_ok,
            "facet_tight_ok": self.facet_tight_ok,
            "removal_ok": self.removal_ok,
            "tight_point_per_facet": {
                str(i): list(p) for i, p in sorted(self.tight_point_per_facet.items())
            },
            "details": self.details,
        }


def canonical_subsets(n: int) -> list[tuple[int, ...]]:
    """All subsets of {1..n} with at least two elements, ordered by
    cardinality then lexicographically on the sorted element list."""
    out = []
    for size in range(2, n + 1):
        out.extend(combinations(range(1, n + 1), size))
    return out


def _ladder_row(n: int, j: int) -> tuple[Fraction, ...]:
    coeffs = []
    for i in range(1, n + 1):
        if i < j:
            coeffs.append(Fraction(1, 2**i))
        elif i == j:
            coeffs.append(Fraction(1))
        else:
            coeffs.append(Fraction(1, 2 ** (i - 1)))
    return tuple(coeffs)


def _subset_row(n: int, subset: tuple[int, ...]) -> tuple[Fraction, ...]:
    s = len(subset)
    least = min(subset)
    members = set(subset)
    coeffs = []
    for i in range(1, n + 1):
        if i == least:
            coeffs.append(Fraction(-1, s))
        elif i in members:
            coeffs.append(Fraction(1, s))
        else:
            coeffs.append(Fraction(-1, s**n))
    return tuple(coeffs)


def build_witness(n: int) -> WitnessPolytope:
    """Construct W_n.  Needs n >= 2 (no two-element subsets exist below that)."""
    if n < 2:
        raise ValueError("witness polytope needs dimension >= 2")
    one = Fraction(1)
    rows: list[LinearInequality] = []
    tags: list[WitnessTag] = []
    for j in range(1, n + 1):
        rows.append(LinearInequality(_ladder_row(n, j), one))
        tags.append(WitnessTag("type1", j=j))
    for j in range(1, n + 1):
        rows.append(LinearInequality(_ladder_row(n, j), one).negated())
        tags.append(WitnessTag("type2", j=j))
    subsets = canonical_subsets(n)
    for sub in subsets:
        rows.append(LinearInequality(_subset_row(n, sub), one))
        tags.append(WitnessTag("type3", subset=sub))
    for sub in subsets:
        rows.append(LinearInequality(_subset_row(n, sub), one).negated())
        tags.append(WitnessTag("type4", subset=sub))
    expected = 2 * (2**n - 1)
    if len(rows) != expected:
        raise AssertionError(f"witness row count {len(rows)} != {expected}")
    return WitnessPolytope(n, Polyhedron(n, tuple(rows)), tuple(tags))


def predicted_tight_point(tag: WitnessTag, n: int) -> IntPoint:
    """The unique feasible integer point on the facet's relative interior."""
    x = [0] * n
    if tag.kind == "type1":
        x[tag.j - 1] = 1
    elif tag.kind == "type2":
        x[tag.j - 1] = -1
    elif tag.kind == "type3":
        least = min(tag.subset)
        x[least - 1] = -1
        for i in tag.subset:
            if i != least:
                x[i - 1] = 1
    elif tag.kind == "type4":
        least = min(tag.subset)
        x[least - 1] = 1
        for i in tag.subset:
            if i != least:
                x[i - 1] = -1
    else:
        raise ValueError(f"unknown tag kind {tag.kind!r}")
    return tuple(x)


def classify_feasible(y: Iterable[int]) -> bool:
    """Membership test for integer points of W_n restricted to {-1,0,1}^n.

    Feasible patterns: the origin, or a leading +1 followed only by
    entries in {-1,0}, or a leading -1 followed only by entries in {0,1}.
    """
    yv = tuple(int(c) for c in y)
    for c in yv:
        if c not in (-1, 0, 1):
            raise ValueError(f"entry {c} outside {{-1,0,1}}")
    lead = next((i for i, c in enumerate(yv) if c != 0), None)
    if lead is None:
        return True
    rest = yv[lead + 1 :]
    if yv[lead] == 1:
        return all(c in (-1, 0) for c in rest)
    return all(c in (0, 1) for c in rest)


def norm_check(witness: WitnessPolytope, radius: int = 3) -> bool:
    """Sweep [-radius, radius]^n: every point with some |y_j| >= 2 must
    violate at least one inequality."""
    box_vals = range(-radius, radius + 1)

    def rec(prefix: list[int], k: int) -> bool:
        if k == witness.n:
            if max(abs(v) for v in prefix) < 2:
                return True
            return not witness.poly.contains(prefix)
        for v in box_vals:
            prefix.append(v)
            ok = rec(prefix, k + 1)
            prefix.pop()
            if not ok:
                return False
        return True

    return rec([], 0)


def feasible_point_count(n: int) -> int:
    """Number of integer points of W_n: the origin plus a pair per
    nonempty subset pattern."""
    return 1 + 2 * (2**n - 1)


def verify(witness: WitnessPolytope, cap: int = 10**6) -> VerificationReport:
    """Mechanical check of the three defining properties of W_n.

    interior_ok: the origin is the only strictly interior integer point.
    facet_tight_ok: each facet is tight at exactly one feasible integer
    point, that point is strict everywhere else, equals the predicted
    pattern, and the points are pairwise distinct.
    removal_ok: dropping facet i leaves at least two interior integer
    points.  When the first two checks pass this holds constructively
    (the origin and facet i's tight point are both strict on every other
    row); otherwise the dropped system is re-enumerated as a fallback.
    """
    poly = witness.poly
    n = witness.n
    outcome = enumerate_points(poly, cap=cap)
    if not isinstance(outcome, Exact):
        raise RuntimeError(f"witness enumeration did not finish: {outcome}")
    pts = list(outcome.points)
    origin = tuple([0] * n)

    tight_sets: dict[IntPoint, tuple[int, ...]] = {
        p: poly.tight_rows(p) for p in pts
    }
    interior = [p for p in pts if not tight_sets[p]]
    interior_ok = interior == [origin]

    tight_point: dict[int, IntPoint] = {}
    facet_ok: dict[int, bool] = {}
    for i, tag in enumerate(witness.tags):
        on_facet = [p for p in pts if i in tight_sets[p]]
        predicted = predicted_tight_point(tag, n)
        ok = (
            len(on_facet) == 1
            and tight_sets[on_facet[0]] == (i,)
            and on_facet[0] == predicted
        )
        facet_ok[i] = ok
        if len(on_facet) == 1:
            tight_point[i] = on_facet[0]
    distinct = len(set(tight_point.values())) == len(tight_point)
    facet_tight_ok = all(facet_ok.values()) and distinct and len(tight_point) == poly.m

    removal_ok = True
    removal_detail: dict[int, str] = {}
    for i in range(poly.m):
        if interior_ok and facet_ok[i]:
            # Constructive: dropping row i frees its tight point, and the
            # origin was already strict everywhere, giving two interior
            # integer points without re-enumeration.
            removal_detail[i] = f"interior gains {tight_point[i]}"
            continue
        dropped = poly.drop(i)
        sub = enumerate_points(dropped, cap=1, strict=True)
        if isinstance(sub, (CapExceeded, UnboundedWithWitness)):
            removal_detail[i] = "fallback enumeration found >= 2 interior points"
        elif isinstance(sub, Exact) and len(sub.points) >= 2:
            removal_detail[i] = "fallback enumeration found >= 2 interior points"
        else:
            removal_detail[i] = f"removal check failed: {sub}"
            removal_ok = False

    details = {
        "facet_count": poly.m,
        "point_count": len(pts),
        "expected_point_count": feasible_point_count(n),
        "removal": {str(i): removal_detail[i] for i in sorted(removal_detail)},
    }
    return VerificationReport(
        interior_ok=interior_ok,
        facet_tight_ok=facet_tight_ok,
        removal_ok=removal_ok,
        tight_point_per_facet=tight_point,
        details=details,
    )


def scaled_rows(witness: WitnessPolytope) -> list[tuple[tuple[int, ...], int]]:
    """Integer-scaled export: each row multiplied by the lcm of its
    denominators, preserving the feasible set."""
    out = []
    for q in witness.poly.ineqs:
        mult = lcm(*(c.denominator for c in q.a), q.beta.denominator)
        out.append(
            (tuple(int(c * mult) for c in q.a), int(q.beta * mult))
        )
    return out
