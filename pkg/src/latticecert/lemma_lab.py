"""Constructive splitting lemmas for integer point sets in convex position.

A finite integer set has the *support hyperplane property* (SHP) when
every member is exposed by a halfspace tight only at that member, which
is the same as saying every member is a vertex of the convex hull.  The
operations here make the classic counting arguments constructive:

* ``parity_midpoint``: with more than 2^n points in convex position, two
  share all coordinate parities and their midpoint is a new integer
  point inside the hull.
* ``split_by_point`` / ``split_by_two_points``: separate the set by a
  hyperplane through one or two interior integer points, losing at most
  the (at most two) points on the spanned line, so that both sides plus
  the pivots are again in convex position.
* ``check_main_lemma``: a set of size at least k*2^n - 2k + 3 in convex
  position has at least floor(3k/2) extra integer points in its hull.

Hyperplane normals come from the integer moment curve (1, t, t^2, ...)
with the smallest positive t avoiding finitely many forbidden
equalities, a deterministic stand-in for "generic rotation" arguments.

Geometry queries dispatch to the exact integer hull kernels when the
configuration is full-dimensional in dimension <= 3, and to the exact LP
membership test otherwise; both routes are exact, only speed differs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .enumeration import LatticePointSet
from .geometry import PostconditionError, PreconditionError
from .hull import LatticeHull, lattice_hull
from .simplex import hull_membership

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class PointConfiguration:
    """Distinct integer points, kept in the order given by the caller."""

    points: tuple[IntPoint, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(
            self, "points", tuple(tuple(int(c) for c in p) for p in self.points)
        )
        if not self.points:
            raise ValueError("a point configuration needs at least one point")
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate points in configuration")
        for p in self.points:
            if len(p) != self.n:
                raise ValueError(f"point {p} does not live in R^{self.n}")

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> "PointConfiguration":
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise ValueError("a point configuration needs at least one point")
        return cls(tuple(pts), len(pts[0]))

    def __len__(self) -> int:
        return len(self.points)

    def without(self, point: IntPoint) -> tuple[IntPoint, ...]:
        return tuple(p for p in self.points if p != point)


@lru_cache(maxsize=512)
def _cached_hull(points: tuple[IntPoint, ...]) -> LatticeHull | None:
    return lattice_hull(points)


def in_hull(q: Sequence[int], points: Sequence[IntPoint]) -> bool:
    """Exact membership of an integer point in conv(points)."""
    hull = _cached_hull(tuple(sorted(set(map(tuple, points)))))
    if hull is not None:
        return hull.contains(q)
    return hull_membership(q, points)


def has_shp(config: PointConfiguration) -> bool:
    """Is every point a vertex of the convex hull?"""
    pts = config.points
    if len(pts) == 1:
        return True
    hull = _cached_hull(tuple(sorted(pts)))
    if hull is not None:
        return all(p in hull.vertices for p in pts)
    return not any(hull_membership(y, config.without(y)) for y in pts)


def _congruent_pairs(config: PointConfiguration):
    pts = config.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if all((a - b) % 2 == 0 for a, b in zip(pts[i], pts[j])):
                yield pts[i], pts[j]


def parity_midpoint(config: PointConfiguration) -> IntPoint:
    """Integer midpoint of the first coordinate-parity-equal pair.

    Needs at least 2^n + 1 points in convex position; the pigeonhole
    principle then forces such a pair, and convex position keeps the
    midpoint out of the set itself.  Both halves of that guarantee are
    asserted on every call.
    """
    n = config.n
    if len(config) < 2**n + 1:
        raise PreconditionError(
            f"need at least {2**n + 1} points in R^{n}, got {len(config)}"
        )
    if not has_shp(config):
        raise PreconditionError("configuration lacks the support hyperplane property")
    for y1, y2 in _congruent_pairs(config):
        z = tuple((a + b) // 2 for a, b in zip(y1, y2))
        if z in config.points:
            raise PostconditionError(
                f"midpoint {z} of {y1},{y2} is a member of a convex-position set"
            )
        if not in_hull(z, config.points):
            raise PostconditionError(f"midpoint {z} escaped the hull")
        return z
    raise AssertionError("pigeonhole failed: no parity-equal pair found")


def _moment_normal(dim: int, t: int) -> tuple[int, ...]:
    return tuple(t**i for i in range(dim))


def _assert_augmented_shp(side: tuple[IntPoint, ...], pivots: tuple[IntPoint, ...], n: int):
    augmented = PointConfiguration(side + pivots, n)
    if not has_shp(augmented):
        raise PostconditionError(
            f"augmented side {augmented.points} lost the support hyperplane property"
        )


def split_by_point(
    config: PointConfiguration, z: Sequence[int]
) -> tuple[tuple[IntPoint, ...], tuple[IntPoint, ...]]:
    """Split by a hyperplane through z that misses every configuration point.

    Returns the two strict sides; their union is the whole configuration
    and each side extended by z is again in convex position (asserted).
    """
    z = tuple(int(c) for c in z)
    if z in config.points:
        raise PreconditionError(f"splitting point {z} belongs to the configuration")
    if not has_shp(config):
        raise PreconditionError("configuration lacks the support hyperplane property")
    if not in_hull(z, config.points):
        raise PreconditionError(f"splitting point {z} is outside the hull")
    diffs = [tuple(a - b for a, b in zip(p, z)) for p in config.points]
    t = 1
    while True:
        f = _moment_normal(config.n, t)
        vals = [sum(a * b for a, b in zip(f, d)) for d in diffs]
        if all(v != 0 for v in vals):
            break
        t += 1
    side1 = tuple(p for p, v in zip(config.points, vals) if v < 0)
    side2 = tuple(p for p, v in zip(config.points, vals) if v > 0)
    if len(side1) + len(side2) != len(config):
        raise AssertionError("hyperplane through z still met the configuration")
    _assert_augmented_shp(side1, (z,), config.n)
    _assert_augmented_shp(side2, (z,), config.n)
    return side1, side2


def split_by_two_points(
    config: PointConfiguration, z1: Sequence[int], z2: Sequence[int]
) -> tuple[tuple[IntPoint, ...], tuple[IntPoint, ...]]:
    """Split by a hyperplane containing the line through z1 and z2.

    Convex position lets the spanned line meet the configuration in at
    most two points; those are discarded, so the sides keep at least
    |X| - 2 points between them, and each side extended by {z1, z2} is
    again in convex position (asserted).
    """
    if config.n < 2:
        raise PreconditionError("a splitting hyperplane through two points needs n >= 2")
    z1 = tuple(int(c) for c in z1)
    z2 = tuple(int(c) for c in z2)
    if z1 == z2:
        raise PreconditionError("the two splitting points must differ")
    if not has_shp(config):
        raise PreconditionError("configuration lacks the support hyperplane property")
    for z in (z1, z2):
        if z in config.points:
            raise PreconditionError(f"splitting point {z} belongs to the configuration")
        if not in_hull(z, config.points):
            raise PreconditionError(f"splitting point {z} is outside the hull")
    d = tuple(a - b for a, b in zip(z2, z1))
    p = next(i for i, c in enumerate(d) if c != 0)
    sign = 1 if d[p] > 0 else -1

    on_line: list[IntPoint] = []
    off_line: list[IntPoint] = []
    reduced: list[tuple[int, ...]] = []
    for x in config.points:
        v = tuple(a - b for a, b in zip(x, z1))
        # Coordinate p folded out so normals stay orthogonal to d; scaled
        # by d[p] (sign-normalized) to keep everything an integer.
        w = tuple(
            sign * (v[i] * d[p] - d[i] * v[p]) for i in range(config.n) if i != p
        )
        if all(c == 0 for c in w):
            on_line.append(x)
        else:
            off_line.append(x)
            reduced.append(w)
    if len(on_line) > 2:
        raise PreconditionError(
            f"line through {z1} and {z2} meets the configuration in {on_line}; "
            "convex position admits at most two"
        )
    t = 1
    while True:
        g = _moment_normal(config.n - 1, t)
        vals = [sum(a * b for a, b in zip(g, w)) for w in reduced]
        if all(v != 0 for v in vals):
            break
        t += 1
    side1 = tuple(x for x, v in zip(off_line, vals) if v < 0)
    side2 = tuple(x for x, v in zip(off_line, vals) if v > 0)
    if len(side1) + len(side2) < len(config) - 2:
        raise AssertionError("two-point split discarded more than the line points")
    _assert_augmented_shp(side1, (z1, z2), config.n)
    _assert_augmented_shp(side2, (z1, z2), config.n)
    return side1, side2


def extra_lattice_points(config: PointConfiguration, volume_cap: int = 10**6) -> LatticePointSet:
    """All integer points of the hull that are not configuration members.

    Sweeps the coordinate bounding box of the configuration with an exact
    membership test per candidate.
    """
    pts = config.points
    lows = [min(p[i] for p in pts) for i in range(config.n)]
    highs = [max(p[i] for p in pts) for i in range(config.n)]
    volume = 1
    for lo, hi in zip(lows, highs):
        volume *= hi - lo + 1
    if volume > volume_cap:
        raise PreconditionError(
            f"bounding box volume {volume} exceeds the sweep cap {volume_cap}"
        )
    member = set(pts)
    hull = _cached_hull(tuple(sorted(member)))
    if hull is not None:
        import numpy as np

        axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lows, highs)]
        grid = np.stack(
            [g.reshape(-1) for g in np.meshgrid(*axes, indexing="ij")], axis=1
        )
        a = np.array(hull.normals, dtype=np.int64)
        b = np.array(hull.rhs, dtype=np.int64)
        mask = (grid @ a.T <= b).all(axis=1)
        inside = [
            p
            for p in map(tuple, grid[mask].tolist())
            if p not in member
        ]
    else:
        stack = [()]
        for lo, hi in zip(lows, highs):
            stack = [pref + (v,) for pref in stack for v in range(lo, hi + 1)]
        inside = [
            p for p in stack if p not in member and hull_membership(p, pts)
        ]
    return LatticePointSet(tuple(inside))


class MainLemmaStatus(Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class MainLemmaResult:
    status: MainLemmaStatus
    threshold: int
    required: int
    extra_found: int | None
    extra_points: tuple[IntPoint, ...] | None

    def to_json_dict(self) -> dict:
        return {
            "status": self.status.value,
            "threshold": self.threshold,
            "required": self.required,
            "extra_found": self.extra_found,
            "extra_points": None
            if self.extra_points is None
            else [list(p) for p in self.extra_points],
        }


def lemma_threshold(n: int, k: int) -> int:
    return k * 2**n - 2 * k + 3


def check_main_lemma(config: PointConfiguration, k: int) -> MainLemmaResult:
    """Count extra hull points against the floor(3k/2) guarantee.

    Vacuous when the hypothesis fails (no convex position, or too few
    points); a counterexample result would refute the underlying theorem
    and is treated as a failure by every caller in this package.
    """
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if config.n < 2:
        raise PreconditionError("the counting lemma needs dimension >= 2")
    threshold = lemma_threshold(config.n, k)
    required = (3 * k) // 2
    if len(config) < threshold or not has_shp(config):
        return MainLemmaResult(MainLemmaStatus.VACUOUS, threshold, required, None, None)
    extra = extra_lattice_points(config)
    status = (
        MainLemmaStatus.HOLDS if len(extra) >= required else MainLemmaStatus.COUNTEREXAMPLE
    )
    return MainLemmaResult(status, threshold, required, len(extra), tuple(extra))


def adjacent_pair_on_segment(z1: IntPoint, z2: IntPoint) -> tuple[IntPoint, IntPoint]:
    """Replace segment endpoints by consecutive lattice points on it.

    The difference vector divided by the gcd of its entries steps through
    every lattice point of the segment, so the first two are adjacent.
    """
    import math

    d = tuple(a - b for a, b in zip(z2, z1))
    g = math.gcd(*(abs(c) for c in d))
    if g == 0:
        raise PreconditionError("segment endpoints coincide")
    step = tuple(c // g for c in d)
    return z1, tuple(a + s for a, s in zip(z1, step))


def random_shp_configuration(
    rng: random.Random, n: int, size: int, max_attempts: int = 500
) -> PointConfiguration:
    """Random set of ``size`` integer points in convex position.

    Samples lattice points from the outer shell of a box (interior
    samples are almost never hull vertices), keeps the hull vertex set,
    and retains a random subset of the requested size; subsets of a set
    in convex position stay in convex position.  Box and sample count
    grow until the hull has enough vertices.
    """
    halfwidth = max(2, int(size**0.5) + 1)
    samples = 3 * size + 6
    for _ in range(max_attempts):
        shell = max(1, halfwidth // 3)
        pts = set()
        for _ in range(samples):
            p = tuple(rng.randint(-halfwidth, halfwidth) for _ in range(n))
            if max(abs(c) for c in p) >= halfwidth - shell:
                pts.add(p)
        hull = lattice_hull(tuple(sorted(pts)))
        if hull is not None and len(hull.vertices) >= size:
            chosen = rng.sample(sorted(hull.vertices), size)
            return PointConfiguration.of(chosen)
        halfwidth += 1
        samples += size
    raise RuntimeError(
        f"could not build a convex-position set of size {size} in R^{n}"
    )


def _trial_rng(seed: int, label: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{label}:{trial}")


def _campaign_report(lemma: str, n: int, k: int | None, trials: int, seed: int) -> dict:
    report = {
        "lemma": lemma,
        "n": n,
        "trials": trials,
        "seed": seed,
        "failures": 0,
        "counterexample": None,
    }
    if k is not None:
        report["k"] = k
    return report


def campaign_midpoint(n: int, trials: int, seed: int = 0) -> dict:
    """Midpoint postcondition on random convex-position sets of size 2^n + 1."""
    report = _campaign_report("midpoint", n, None, trials, seed)
    size = 2**n + 1
    for trial in range(trials):
        rng = _trial_rng(seed, f"midpoint:{n}", trial)
        config = random_shp_configuration(rng, n, size)
        try:
            parity_midpoint(config)
        except PostconditionError as exc:
            report["failures"] += 1
            report["counterexample"] = {
                "trial": trial,
                "points": [list(p) for p in config.points],
                "error": str(exc),
            }
            break
    return report


def campaign_split_single(n: int, trials: int, seed: int = 0) -> dict:
    """One-point split postconditions on random convex-position sets."""
    report = _campaign_report("split1", n, None, trials, seed)
    size = 2**n + 1
    for trial in range(trials):
        rng = _trial_rng(seed, f"split1:{n}", trial)
        config = random_shp_configuration(rng, n, size)
        try:
            z = parity_midpoint(config)
            s1, s2 = split_by_point(config, z)
            if len(s1) + len(s2) != len(config):
                raise PostconditionError("split lost configuration points")
        except PostconditionError as exc:
            report["failures"] += 1
            report["counterexample"] = {
                "trial": trial,
                "points": [list(p) for p in config.points],
                "error": str(exc),
            }
            break
    return report


def _two_midpoints(config: PointConfiguration) -> tuple[IntPoint, IntPoint] | None:
    seen: list[IntPoint] = []
    for y1, y2 in _congruent_pairs(config):
        z = tuple((a + b) // 2 for a, b in zip(y1, y2))
        if z in config.points or not in_hull(z, config.points):
            continue
        if z not in seen:
            seen.append(z)
        if len(seen) == 2:
            return seen[0], seen[1]
    return None


def campaign_split_pair(n: int, trials: int, seed: int = 0) -> dict:
    """Two-point split postconditions, including the size-loss bound."""
    report = _campaign_report("split2", n, None, trials, seed)
    # Centrally symmetric configurations can collapse every parity-pair
    # midpoint to the center, so two distinct pivots are instead drawn
    # from the guaranteed extra hull points at the k=2 threshold size.
    size = lemma_threshold(n, 2)
    for trial in range(trials):
        rng = _trial_rng(seed, f"split2:{n}", trial)
        config = random_shp_configuration(rng, n, size)
        pair = _two_midpoints(config)
        if pair is None:
            extras = list(extra_lattice_points(config))
            if len(extras) < 2:
                raise AssertionError(
                    f"threshold-size configuration had {len(extras)} extra points"
                )
            pair = (extras[0], extras[1])
        try:
            s1, s2 = split_by_two_points(config, pair[0], pair[1])
            if len(s1) + len(s2) < len(config) - 2:
                raise PostconditionError("two-point split lost more than two points")
        except PostconditionError as exc:
            report["failures"] += 1
            report["counterexample"] = {
                "trial": trial,
                "points": [list(p) for p in config.points],
                "error": str(exc),
            }
            break
    return report


def campaign_main_lemma(n: int, k: int, trials: int, seed: int = 0) -> dict:
    """Extra-point count at the threshold cardinality, random campaign."""
    report = _campaign_report("main", n, k, trials, seed)
    size = lemma_threshold(n, k)
    for trial in range(trials):
        rng = _trial_rng(seed, f"main:{n}:{k}", trial)
        config = random_shp_configuration(rng, n, size)
        result = check_main_lemma(config, k)
        if result.status is MainLemmaStatus.COUNTEREXAMPLE:
            report["failures"] += 1
            report["counterexample"] = {
                "trial": trial,
                "points": [list(p) for p in config.points],
                "extra_found": result.extra_found,
                "required": result.required,
            }
            break
        if result.status is MainLemmaStatus.VACUOUS:
            raise AssertionError("generator produced a configuration below threshold")
    return report


def campaign_shp(n: int, trials: int, seed: int = 0) -> dict:
    """Vertex-set characterization of convex position, positive and negative."""
    report = _campaign_report("shp", n, None, trials, seed)
    size = 2**n + 1
    for trial in range(trials):
        rng = _trial_rng(seed, f"shp:{n}", trial)
        config = random_shp_configuration(rng, n, size)
        ok = has_shp(config)
        spoiled = None
        if ok:
            z = parity_midpoint(config)
            spoiled = PointConfiguration(config.points + (z,), n)
            ok = not has_shp(spoiled)
        if not ok:
            report["failures"] += 1
            report["counterexample"] = {
                "trial": trial,
                "points": [list(p) for p in config.points],
            }
            break
    return report


def exhaustive_main_lemma_grid(side: int = 3) -> dict:
    """Every convex-position subset of the side x side grid with at least
    five points has an extra hull point (the k = 1 case, exhaustively)."""
    from itertools import combinations

    grid = [(x, y) for x in range(side) for y in range(side)]
    checked = 0
    shp_sets = 0
    for r in range(5, len(grid) + 1):
        for subset in combinations(grid, r):
            config = PointConfiguration.of(subset)
            checked += 1
            if not has_shp(config):
                continue
            shp_sets += 1
            result = check_main_lemma(config, 1)
            if result.status is not MainLemmaStatus.HOLDS:
                return {
                    "lemma": "main-exhaustive",
                    "side": side,
                    "checked": checked,
                    "convex_position_sets": shp_sets,
                    "failures": 1,
                    "counterexample": [list(p) for p in subset],
                }
    return {
        "lemma": "main-exhaustive",
        "side": side,
        "checked": checked,
        "convex_position_sets": shp_sets,
        "failures": 0,
        "counterexample": None,
    }


CAMPAIGNS = {
    "shp": campaign_shp,
    "midpoint": campaign_midpoint,
    "split1": campaign_split_single,
    "split2": campaign_split_pair,
}
