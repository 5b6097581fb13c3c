"""Certificates: constraint subsets preserving the exact integer point set.

A subset S of rows is *valid* for P when the subsystem P_S has exactly
the same integer points as P.  Since P_S only relaxes P, invalidity is
always witnessed by an extra integer point (or an unbounded direction
that manufactures one), never by a missing point; verdicts carry those
witnesses.

The minimum search treats validity as an implicit hitting-set problem:
every known "bad" integer point z outside P must be cut by at least one
chosen row, candidate subsets are generated as minimum hitting sets of
the bad points discovered so far, and each candidate is verified by
exact enumeration, contributing a fresh bad point on failure.  A failed
superset therefore prunes every subset missing the same separation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bounds import c_upper
from .enumeration import (
    CapExceeded,
    DEFAULT_CAP,
    Exact,
    LatticePointSet,
    UnboundedInconclusive,
    UnboundedWithWitness,
    enumerate_points,
    integer_ray,
    iter_lattice_points,
)
from .geometry import IntegerBox, Polyhedron, PreconditionError, Relation
from .simplex import BoxBounded, BoxInfeasible, BoxUnbounded, bounding_box

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class Invalid:
    extra_point: IntPoint | None = None
    missing_point: IntPoint | None = None
    ray: IntPoint | None = None


@dataclass(frozen=True)
class InconclusiveUnbounded:
    searched: IntegerBox | None = None


Verdict = Valid | Invalid | InconclusiveUnbounded


@dataclass(frozen=True)
class Certificate:
    subset: tuple[int, ...]
    k: int
    verdict: Verdict
    within_bound: bool

    def to_json_dict(self) -> dict:
        if isinstance(self.verdict, Valid):
            v = "valid"
        elif isinstance(self.verdict, Invalid):
            v = "invalid"
        else:
            v = "inconclusive_unbounded"
        return {
            "subset": list(self.subset),
            "size": len(self.subset),
            "k": self.k,
            "verdict": v,
            "within_bound": self.within_bound,
        }


class CertificateSearchFailed(RuntimeError):
    """The size budget ran out before a provably valid subset appeared.

    Only reachable through inconclusive unbounded subsystems, which are
    never accepted as valid; the message records the candidates involved.
    """


def _require_exact(poly: Polyhedron, cap: int) -> LatticePointSet:
    outcome = enumerate_points(poly, cap=cap)
    if not isinstance(outcome, Exact):
        raise PreconditionError(
            f"certificate search needs an exactly enumerated system, got {outcome}"
        )
    return outcome.points


def check_certificate(
    poly: Polyhedron,
    subset: Iterable[int],
    expected: LatticePointSet,
    margin_min: int = 50,
    margin_factor: int = 10,
) -> Verdict:
    """Does the subsystem have exactly the expected integer points?

    Bounded subsystems are streamed in lex order and the first point
    outside ``expected`` ends the check.  Unbounded subsystems with
    expected points are invalid with a ray witness (the ray plus any
    expected point yields infinitely many integer points); unbounded
    empty systems fall back to a margin-box search and stay inconclusive
    when it finds nothing.
    """
    sub = poly.subsystem(subset)
    expected_set = set(expected)
    bb = bounding_box(sub)
    if isinstance(bb, BoxInfeasible):
        if expected_set:
            return Invalid(missing_point=sorted(expected_set)[0])
        return Valid()
    if isinstance(bb, BoxUnbounded):
        ray = integer_ray(bb.rays[0])
        if expected_set:
            base = sorted(expected_set)[0]
            t = 1
            while True:
                cand = tuple(b + t * r for b, r in zip(base, ray))
                if cand not in expected_set:
                    return Invalid(extra_point=cand, ray=ray)
                t += 1
        probe = enumerate_points(
            sub, cap=1, margin_min=margin_min, margin_factor=margin_factor
        )
        if isinstance(probe, UnboundedWithWitness):
            return Invalid(extra_point=probe.point, ray=probe.ray)
        if isinstance(probe, UnboundedInconclusive):
            return InconclusiveUnbounded(searched=probe.searched)
        raise AssertionError(f"unbounded system produced {probe}")
    if bb.box is None:
        if expected_set:
            return Invalid(missing_point=sorted(expected_set)[0])
        return Valid()
    seen = 0
    for p in iter_lattice_points(sub):
        if p not in expected_set:
            return Invalid(extra_point=p)
        seen += 1
    if seen != len(expected_set):
        # P_S relaxes P, so enumerate(P_S) should contain expected; kept
        # as a defensive check against a caller passing the wrong set.
        missing = sorted(expected_set - set(iter_lattice_points(sub)))[0]
        return Invalid(missing_point=missing)
    return Valid()


def greedy_certificate(
    poly: Polyhedron, cap: int = DEFAULT_CAP
) -> tuple[Certificate, list[dict]]:
    """Drop rows in ascending index order, keeping only drops that stay valid.

    Once a drop is refused it can never become possible again (relaxing
    further only adds integer points), so one pass yields an irredundant
    valid subset.  Inconclusive drops are refused: a valid verdict must
    be a proof, so unbounded k=0 subsystems are never accepted.
    """
    expected = _require_exact(poly, cap)
    kept = list(range(poly.m))
    audit: list[dict] = []
    for i in range(poly.m):
        trial = [j for j in kept if j != i]
        verdict = check_certificate(poly, trial, expected)
        if isinstance(verdict, Valid):
            kept = trial
            audit.append({"row": i, "action": "dropped"})
        else:
            reason = type(verdict).__name__
            audit.append({"row": i, "action": "kept", "reason": reason})
    cert = Certificate(
        subset=tuple(kept),
        k=len(expected),
        verdict=check_certificate(poly, kept, expected),
        within_bound=len(kept) <= c_upper(poly.n, len(expected)),
    )
    return cert, audit


def _violator_mask(poly: Polyhedron, point: IntPoint) -> int:
    mask = 0
    for i, q in enumerate(poly.ineqs):
        if q.classify(point) is Relation.VIOLATED:
            mask |= 1 << i
    return mask


def _hitting_sets_of_size(masks: Sequence[int], m: int, size: int):
    """Yield index tuples of the given size hitting every mask, in lex order."""

    def rec(start: int, chosen: list[int], unhit: list[int]):
        if len(chosen) == size:
            if not unhit:
                yield tuple(chosen)
            return
        # Lower bound: pairwise-disjoint unhit masks each need their own pick.
        lb = 0
        used = 0
        for u in unhit:
            if u & used == 0:
                lb += 1
                used |= u
        if len(chosen) + lb > size:
            return
        # Dead branch: some mask only has candidate rows we already passed.
        if any(u >> start == 0 for u in unhit):
            return
        for i in range(start, m):
            bit = 1 << i
            chosen.append(i)
            yield from rec(i + 1, chosen, [u for u in unhit if not u & bit])
            chosen.pop()

    yield from rec(0, [], list(masks))


def _min_hitting_set(
    masks: Sequence[int], m: int, excluded: set[frozenset], limit: int
) -> tuple[int, ...] | None:
    """Smallest (then lex-least) index set hitting all masks, skipping
    exact matches in ``excluded``."""
    for size in range(0, limit + 1):
        for cand in _hitting_sets_of_size(masks, m, size):
            if frozenset(cand) not in excluded:
                return cand
    return None


def minimum_certificate(
    poly: Polyhedron,
    size_limit: int | None = None,
    cap: int = DEFAULT_CAP,
    max_rounds: int = 100000,
) -> tuple[Certificate, list[dict]]:
    """Smallest valid subset, ties broken lexicographically.

    Exhaustive regime: at most 24 rows.  The loop alternates a minimum
    hitting set over known bad points with a full validity check; a valid
    hitting set is globally optimal because every valid subset must hit
    every bad point.
    """
    if poly.m > 24:
        raise PreconditionError(
            f"exhaustive minimum search is limited to 24 rows, got {poly.m}"
        )
    expected = _require_exact(poly, cap)
    limit = poly.m if size_limit is None else min(size_limit, poly.m)
    masks: list[int] = []
    bad_points: list[IntPoint] = []
    excluded: set[frozenset] = set()
    audit: list[dict] = []
    for _ in range(max_rounds):
        cand = _min_hitting_set(masks, poly.m, excluded, limit)
        if cand is None:
            raise CertificateSearchFailed(
                f"no subset of size <= {limit} could be certified valid; "
                f"{len(excluded)} candidates were inconclusive (unbounded, "
                f"k=0, nothing found in the search box)"
            )
        verdict = check_certificate(poly, cand, expected)
        if isinstance(verdict, Valid):
            cert = Certificate(
                subset=tuple(cand),
                k=len(expected),
                verdict=verdict,
                within_bound=len(cand) <= c_upper(poly.n, len(expected)),
            )
            audit.append({"candidate": list(cand), "result": "valid"})
            return cert, audit
        if isinstance(verdict, Invalid):
            z = verdict.extra_point
            if z is None:
                raise AssertionError(
                    "invalid subsystem without an extra-point witness"
                )
            mask = _violator_mask(poly, z)
            if mask == 0:
                raise AssertionError(
                    f"witness point {z} does not violate any original row"
                )
            masks.append(mask)
            bad_points.append(z)
            audit.append(
                {"candidate": list(cand), "result": "invalid", "bad_point": list(z)}
            )
        else:
            excluded.add(frozenset(cand))
            audit.append({"candidate": list(cand), "result": "inconclusive"})
    raise CertificateSearchFailed("minimum search did not converge")
