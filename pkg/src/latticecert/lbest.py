"""The l-best integer program as a violator space, with Clarkson sampling.

An instance is min c.x over integer points of a box 0 <= x <= u subject
to a row set H.  The composite objective cbar = u^n c + sum u^(n-i) e_i
orders box points by c-value with lexicographic tie-breaking, provided it
is injective on the box; injectivity is checked per instance (it can fail
even for u >= 2, e.g. n=2, u=2, c=(2,1) collides on (1,0) and (0,2)), and
ill-defined instances are rejected rather than silently ordered.

``V(G)`` is the set of rows whose addition changes the tuple of the l
cbar-smallest feasible points (empty when fewer than l points remain).
Two independent solvers answer tuple queries: a branch-and-bound over the
exact LP relaxation (``solve_small_ip``/``l_best``) and an exhaustive
box-enumeration engine used by the violator machinery; they cross-check
each other wherever a basis is returned.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, lcm
from typing import Iterable, Sequence

from .bounds import c_upper
from .geometry import (
    LinearInequality,
    Polyhedron,
    PostconditionError,
    PreconditionError,
    Relation,
    parse_rational,
)
from .simplex import Infeasible, Optimal, lp_solve

IntPoint = tuple[int, ...]


class TieBreakCollision(ValueError):
    """Two box points share a composite objective value; the l-tuple
    would be ill-defined, so the instance is rejected."""


@dataclass(frozen=True)
class ILPInstance:
    """Integer program over the box 0 <= x <= u with integer rows.

    The box constraints are always active and are not members of the row
    set H.  Rational input rows are cleared to integers by per-row
    scaling at ingestion, which preserves the feasible set.
    """

    n: int
    rows: tuple[LinearInequality, ...]
    c: tuple[int, ...]
    u: int

    def __post_init__(self):
        if self.u < 1:
            raise ValueError("variable upper bound u must be >= 1")
        if len(self.c) != self.n:
            raise ValueError("objective length does not match dimension")
        object.__setattr__(self, "c", tuple(int(v) for v in self.c))
        cleared = []
        for q in self.rows:
            if q.dim != self.n:
                raise ValueError("row dimension mismatch")
            mult = lcm(*(c.denominator for c in q.a), q.beta.denominator)
            cleared.append(
                LinearInequality(
                    tuple(Fraction(int(c * mult)) for c in q.a),
                    Fraction(int(q.beta * mult)),
                )
            )
        object.__setattr__(self, "rows", tuple(cleared))

    @property
    def m(self) -> int:
        return len(self.rows)

    def box_points(self) -> int:
        return (self.u + 1) ** self.n

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "c": list(self.c),
            "u": self.u,
            "rows": [q.to_json_dict() for q in self.rows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ILPInstance":
        try:
            n = data["n"]
            c = data["c"]
            u = data["u"]
            raw = data["rows"]
        except (TypeError, KeyError) as exc:
            raise ValueError(f"ILP JSON missing field: {exc}") from exc
        if not all(isinstance(v, int) for v in c):
            raise ValueError("objective entries must be integers")
        rows = tuple(
            LinearInequality(
                tuple(parse_rational(s) for s in row["a"]),
                parse_rational(row["b"]),
            )
            for row in raw
        )
        return cls(n=n, rows=rows, c=tuple(c), u=u)


def ilp_from_json(text: str) -> ILPInstance:
    return ILPInstance.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class TieBreakObjective:
    cbar: tuple[int, ...]

    def value(self, point: Sequence[int]) -> int:
        return sum(a * int(b) for a, b in zip(self.cbar, point))


def tie_break(c: Sequence[int], u: int) -> TieBreakObjective:
    """cbar = u^n c + sum_i u^(n-i) e_i, in exact big-integer arithmetic."""
    if u < 1:
        raise ValueError("u must be >= 1")
    n = len(c)
    scale = u**n
    return TieBreakObjective(
        tuple(scale * int(c[i]) + u ** (n - 1 - i) for i in range(n))
    )


def _box_points(n: int, u: int) -> list[IntPoint]:
    pts: list[IntPoint] = [()]
    for _ in range(n):
        pts = [p + (v,) for p in pts for v in range(u + 1)]
    return pts


INJECTIVITY_SWEEP_LIMIT = 10**5


def tiebreak_injective(inst: ILPInstance) -> bool:
    """Exhaustively check that cbar separates all box points.

    Only feasible for boxes up to the sweep limit; larger boxes raise,
    since an unchecked tie-break must not be silently trusted.
    """
    if inst.box_points() > INJECTIVITY_SWEEP_LIMIT:
        raise PreconditionError(
            f"injectivity sweep over {inst.box_points()} points exceeds "
            f"{INJECTIVITY_SWEEP_LIMIT}"
        )
    cbar = tie_break(inst.c, inst.u)
    seen: set[int] = set()
    for p in _box_points(inst.n, inst.u):
        v = cbar.value(p)
        if v in seen:
            return False
        seen.add(v)
    return True


@lru_cache(maxsize=256)
def _injective_cached(inst: ILPInstance) -> bool:
    return tiebreak_injective(inst)


def _require_injective(inst: ILPInstance):
    if not _injective_cached(inst):
        raise TieBreakCollision(
            f"cbar is not injective on the box for c={inst.c}, u={inst.u}; "
            "the l-tuple would be ill-defined"
        )


def box_rows(n: int, u: int) -> list[LinearInequality]:
    rows = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        rows.append(LinearInequality(tuple(e), Fraction(u)))
        rows.append(LinearInequality(tuple(-c for c in e), Fraction(0)))
    return rows


@dataclass(frozen=True)
class LBestTuple:
    """Up to l feasible points, strictly increasing in cbar."""

    points: tuple[IntPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_json_list(self) -> list[list[int]]:
        return [list(p) for p in self.points]


def solve_small_ip(
    rows: Sequence[LinearInequality],
    cbar: TieBreakObjective | Sequence[int],
    n: int,
    u: int,
    extra_cuts: Sequence[LinearInequality] = (),
) -> IntPoint | None:
    """cbar-minimal integer point of rows + cuts + box, or None.

    Depth-first branch and bound on the exact rational LP relaxation,
    branching on the most fractional coordinate (ties to the lowest
    index), exploring the floor branch first.  The box keeps every
    relaxation bounded, and integrality of cbar on integer points makes
    ceil(LP value) a valid node bound.
    """
    cb = cbar.cbar if isinstance(cbar, TieBreakObjective) else tuple(cbar)
    base = tuple(rows) + tuple(extra_cuts) + tuple(box_rows(n, u))
    obj = [Fraction(v) for v in cb]
    best_val: int | None = None
    best_pt: IntPoint | None = None
    stack: list[tuple[LinearInequality, ...]] = [()]
    while stack:
        branches = stack.pop()
        res = lp_solve(Polyhedron(n, base + branches), obj, "min")
        if isinstance(res, Infeasible):
            continue
        if not isinstance(res, Optimal):
            raise AssertionError("boxed relaxation cannot be unbounded")
        if best_val is not None and ceil(res.value) >= best_val:
            continue
        x = res.point
        frac_i = -1
        frac_dist = Fraction(0)
        for i, v in enumerate(x):
            d = min(v - floor(v), ceil(v) - v)
            if d > frac_dist:
                frac_dist = d
                frac_i = i
        if frac_i < 0:
            pt = tuple(int(v) for v in x)
            val = sum(a * b for a, b in zip(cb, pt))
            if best_val is None or val < best_val:
                best_val, best_pt = val, pt
            continue
        e = [Fraction(0)] * n
        e[frac_i] = Fraction(1)
        down = LinearInequality(tuple(e), Fraction(floor(x[frac_i])))
        up = LinearInequality(tuple(-c for c in e), Fraction(-ceil(x[frac_i])))
        stack.append(branches + (up,))
        stack.append(branches + (down,))
    return best_pt


def l_best(G: Iterable[int], inst: ILPInstance, l: int) -> LBestTuple:
    """The l cbar-smallest feasible points of the subsystem G, via
    repeated IP solves with an exclusion cut after each optimum."""
    if l < 1:
        raise ValueError("l must be >= 1")
    _require_injective(inst)
    cbar = tie_break(inst.c, inst.u)
    rows = [inst.rows[i] for i in sorted(set(G))]
    cuts: list[LinearInequality] = []
    out: list[IntPoint] = []
    for _ in range(l):
        pt = solve_small_ip(rows, cbar, inst.n, inst.u, cuts)
        if pt is None:
            break
        out.append(pt)
        cuts.append(
            LinearInequality(
                tuple(Fraction(-v) for v in cbar.cbar),
                Fraction(-(cbar.value(pt) + 1)),
            )
        )
    return LBestTuple(tuple(out))


class BoxEngine:
    """Exhaustive exact tuple oracle over the instance's box.

    Box points are pre-sorted by cbar; each point carries a bitmask of
    the rows it violates, so the l-tuple of any row subset is a single
    linear scan with integer bit tests.  Everything is exact; this is
    the workhorse behind violator queries and Clarkson iterations.
    """

    def __init__(self, inst: ILPInstance):
        _require_injective(inst)
        self.inst = inst
        cbar = tie_break(inst.c, inst.u)
        pts = sorted(_box_points(inst.n, inst.u), key=lambda p: (cbar.value(p), p))
        self.points = pts
        self.masks: list[int] = []
        for p in pts:
            mask = 0
            for i, q in enumerate(inst.rows):
                if q.classify(p) is Relation.VIOLATED:
                    mask |= 1 << i
            self.masks.append(mask)
        self.mask_of = dict(zip(self.points, self.masks))
        self.tuple_queries = 0

    def tuple_of(self, gmask: int, l: int) -> tuple[IntPoint, ...]:
        self.tuple_queries += 1
        out = []
        for p, mask in zip(self.points, self.masks):
            if mask & gmask == 0:
                out.append(p)
                if len(out) == l:
                    break
        return tuple(out)

    def violators(self, gmask: int, l: int) -> int:
        """Bitmask of rows outside G that change the l-tuple, honoring the
        degenerate rule (empty when fewer than l points are feasible)."""
        t = self.tuple_of(gmask, l)
        if len(t) < l:
            return 0
        v = 0
        for p in t:
            v |= self.mask_of[p]
        return v & ~gmask

    def greedy_basis(self, members: Sequence[int], l: int) -> list[int]:
        """Irredundant subset with the same l-tuple, dropping rows in
        ascending index order; a refused drop never becomes possible."""
        gmask = 0
        for i in members:
            gmask |= 1 << i
        target = self.tuple_of(gmask, l)
        kept = gmask
        for i in sorted(members):
            trial = kept & ~(1 << i)
            if self.tuple_of(trial, l) == target:
                kept = trial
        return [i for i in sorted(members) if kept >> i & 1]


@lru_cache(maxsize=64)
def _engine(inst: ILPInstance) -> BoxEngine:
    return BoxEngine(inst)


def violates(G: Iterable[int], h: int, inst: ILPInstance, l: int) -> bool:
    """Does adding row h change the l-tuple of G?

    False whenever G already has fewer than l feasible points (the
    violator map is empty there by definition).
    """
    gset = set(G)
    if h in gset:
        raise PreconditionError(f"row {h} is already a member of G")
    if not 0 <= h < inst.m:
        raise IndexError(f"row index {h} out of range")
    engine = _engine(inst)
    gmask = 0
    for i in gset:
        gmask |= 1 << i
    t = engine.tuple_of(gmask, l)
    if len(t) < l:
        return False
    return engine.tuple_of(gmask | (1 << h), l) != t


@dataclass(frozen=True)
class Basis:
    """Row subset reproducing the full instance's l-tuple."""

    indices: tuple[int, ...]
    l: int
    delta: int
    tuple_points: tuple[IntPoint, ...]
    method: str
    stats: dict

    def to_json_dict(self) -> dict:
        return {
            "basis": list(self.indices),
            "basis_size": len(self.indices),
            "l": self.l,
            "delta": self.delta,
            "tuple": [list(p) for p in self.tuple_points],
            "method": self.method,
            "stats": self.stats,
        }


def _weighted_sample(rng: random.Random, indices: list[int], weights: list[int], r: int) -> list[int]:
    pool = list(indices)
    w = list(weights)
    chosen = []
    for _ in range(r):
        total = sum(w)
        t = rng.randrange(total)
        acc = 0
        for pos, wi in enumerate(w):
            acc += wi
            if t < acc:
                break
        chosen.append(pool.pop(pos))
        w.pop(pos)
    return chosen


def clarkson_basis(inst: ILPInstance, l: int, seed: int = 0) -> Basis:
    """Basis of the full row set by Clarkson-style iterative reweighting.

    Small instances (m <= 9 delta^2) go straight to the greedy reduction.
    Otherwise rows are sampled by weight (r = 6 delta^2 without
    replacement), the sample's basis is computed, and its violators
    either get their weights doubled (when light enough, at most a
    1/(3 delta) fraction of the total) or the sample is redrawn.  The
    returned basis is verified post hoc with one extra branch-and-bound
    ``l_best`` call, so the two solvers cross-check each other.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    delta = c_upper(inst.n, l)
    engine = _engine(inst)
    m = inst.m
    rng = random.Random(seed)
    stats: dict = {"delta": delta, "seed": seed, "iterations": 0, "ip_solves": 0}
    queries_before = engine.tuple_queries
    full_mask = (1 << m) - 1

    if m <= 9 * delta * delta:
        basis = engine.greedy_basis(range(m), l)
        method = "greedy"
    else:
        weights = {i: 1 for i in range(m)}
        r = 6 * delta * delta
        basis = None
        for _ in range(100000):
            stats["iterations"] += 1
            idx = sorted(weights)
            sample = _weighted_sample(rng, idx, [weights[i] for i in idx], r)
            b = engine.greedy_basis(sample, l)
            bmask = 0
            for i in b:
                bmask |= 1 << i
            vmask = engine.violators(bmask, l)
            if vmask == 0:
                basis = b
                break
            vweight = sum(weights[i] for i in range(m) if vmask >> i & 1)
            total = sum(weights.values())
            if 3 * delta * vweight <= total:
                for i in range(m):
                    if vmask >> i & 1:
                        weights[i] *= 2
        if basis is None:
            raise RuntimeError("Clarkson iteration failed to converge")
        method = "clarkson"

    bmask = 0
    for i in basis:
        bmask |= 1 << i
    tuple_points = engine.tuple_of(bmask, l)
    if engine.tuple_of(full_mask, l) != tuple_points:
        raise PostconditionError("basis does not reproduce the full l-tuple")
    if len(basis) > delta:
        raise PostconditionError(
            f"basis size {len(basis)} exceeds the combinatorial dimension {delta}"
        )
    check = l_best(basis, inst, l)
    stats["ip_solves"] += len(check) + 1
    if tuple(check.points) != tuple_points:
        raise PostconditionError(
            "branch-and-bound l-tuple disagrees with the enumeration engine"
        )
    stats["tuple_queries"] = engine.tuple_queries
    return Basis(
        indices=tuple(sorted(basis)),
        l=l,
        delta=delta,
        tuple_points=tuple_points,
        method=method,
        stats=stats,
    )


def violator_axiom_check(
    inst: ILPInstance, l: int, trials: int, seed: int = 0
) -> dict:
    """Random-chain test of the violator space axioms.

    Consistency (G never violates itself) and locality (V is stable when
    a chain adds only non-violators) are checked with V computed
    exhaustively through the enumeration engine.
    """
    engine = _engine(inst)
    m = inst.m
    report = {
        "trials": trials,
        "seed": seed,
        "consistency_failures": 0,
        "locality_failures": 0,
        "degenerate_trials": 0,
    }
    for trial in range(trials):
        rng = random.Random(f"{seed}:axioms:{trial}")
        fmask = 0
        for i in range(m):
            if rng.random() < 0.5:
                fmask |= 1 << i
        vf = engine.violators(fmask, l)
        if engine.tuple_of(fmask, l) == () or len(engine.tuple_of(fmask, l)) < l:
            report["degenerate_trials"] += 1
        if vf & fmask:
            report["consistency_failures"] += 1
            continue
        # Grow G by non-violators only, so the locality hypothesis holds.
        allowed = [i for i in range(m) if not (fmask >> i & 1) and not (vf >> i & 1)]
        gmask = fmask
        for i in allowed:
            if rng.random() < 0.5:
                gmask |= 1 << i
        vg = engine.violators(gmask, l)
        if vg & gmask:
            report["consistency_failures"] += 1
        if vg != vf:
            report["locality_failures"] += 1
    return report
