"""Exact convex hulls of small integer point sets in dimensions 1..3.

The facet enumeration is deliberately brute force: every pair (2D) or
triple (3D) of points spans a candidate hyperplane, and a hyperplane is a
facet exactly when all points lie weakly on one side.  All arithmetic is
integer.  The 3D side tests are vectorized with numpy int64, which is
exact as long as coordinates stay below _COORD_LIMIT; inputs beyond that
(or degenerate inputs) make the builders return None and callers fall
back to the LP route in :mod:`latticecert.simplex`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd

import numpy as np


@lru_cache(maxsize=128)
def _triple_indices(v: int) -> "np.ndarray":
    return np.array(list(combinations(range(v), 3)), dtype=np.intp)

# int64 safety: |cross entry| <= 8c^2 and |dot| <= 3 * 8c^2 * 2c = 48c^3,
# so c <= 2^18 keeps every intermediate far below 2^63.
_COORD_LIMIT = 1 << 18

IntPoint = tuple[int, ...]


def affine_rank(points) -> int:
    """Rank of the difference vectors, by exact integer elimination."""
    pts = [tuple(int(c) for c in p) for p in points]
    if len(pts) <= 1:
        return 0
    base = pts[0]
    rows = [[c - b for c, b in zip(p, base)] for p in pts[1:]]
    return _int_rank(rows)


def _int_rank(rows) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rows and col < width:
        pivot = next((i for i, r in enumerate(rows) if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[0], rows[pivot] = rows[pivot], rows[0]
        head = rows[0]
        reduced = []
        for r in rows[1:]:
            if r[col] != 0:
                f1, f2 = head[col], r[col]
                r = [f1 * x - f2 * h for x, h in zip(r, head)]
            if any(r):
                reduced.append(r)
        rows = reduced
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class LatticeHull:
    """Facet description of a full-dimensional integer hull.

    Each facet i is the inequality normals[i] . x <= rhs[i] with an
    integer primitive normal.  ``vertices`` is the exact vertex set of
    the hull, which for a set with the support hyperplane property is the
    whole input.
    """

    dim: int
    normals: tuple[IntPoint, ...]
    rhs: tuple[int, ...]
    vertices: frozenset[IntPoint]

    def contains(self, q, strict: bool = False) -> bool:
        q = tuple(int(c) for c in q)
        for a, b in zip(self.normals, self.rhs):
            v = sum(x * y for x, y in zip(a, q))
            if v > b or (strict and v == b):
                return False
        return True

    def contains_many(self, candidates: list[IntPoint]) -> list[bool]:
        if not candidates:
            return []
        if self.dim >= 2 and max(
            abs(c) for p in candidates for c in p
        ) <= _COORD_LIMIT:
            q = np.array(candidates, dtype=np.int64)
            a = np.array(self.normals, dtype=np.int64)
            b = np.array(self.rhs, dtype=np.int64)
            mask = (q @ a.T <= b).all(axis=1)
            return [bool(v) for v in mask]
        return [self.contains(p) for p in candidates]


def lattice_hull(points) -> LatticeHull | None:
    """Build the hull of a full-dimensional set in dimension 1, 2 or 3.

    Returns None when the input is not full-dimensional in its ambient
    space, the dimension is unsupported, or coordinates exceed the int64
    safety bound.  Callers must then use the exact LP fallback.
    """
    pts = sorted({tuple(int(c) for c in p) for p in points})
    if not pts:
        return None
    dim = len(pts[0])
    if dim not in (1, 2, 3):
        return None
    if max(abs(c) for p in pts for c in p) > _COORD_LIMIT:
        return None
    if affine_rank(pts) < dim:
        return None
    if dim == 1:
        lo, hi = pts[0][0], pts[-1][0]
        return LatticeHull(
            1,
            ((1,), (-1,)),
            (hi, -lo),
            frozenset({(lo,), (hi,)}),
        )
    if dim == 2:
        return _hull_2d(pts)
    return _hull_3d(pts)


def _hull_2d(pts: list[IntPoint]) -> LatticeHull:
    # Andrew monotone chain with strict turns, so collinear interior
    # points are never reported as vertices.
    def half(seq):
        out: list[IntPoint] = []
        for p in seq:
            while len(out) >= 2:
                (x1, y1), (x2, y2) = out[-2], out[-1]
                if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) > 0:
                    break
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    ring = lower[:-1] + upper[:-1]
    normals = []
    rhs = []
    for p, q in zip(ring, ring[1:] + ring[:1]):
        dx, dy = q[0] - p[0], q[1] - p[1]
        a = (dy, -dx)
        g = gcd(abs(a[0]), abs(a[1]))
        a = (a[0] // g, a[1] // g)
        normals.append(a)
        rhs.append(a[0] * p[0] + a[1] * p[1])
    return LatticeHull(2, tuple(normals), tuple(rhs), frozenset(ring))


def _hull_3d(pts: list[IntPoint]) -> LatticeHull:
    arr = np.array(pts, dtype=np.int64)
    v = len(pts)
    idx = _triple_indices(v)
    p0 = arr[idx[:, 0]]
    normals = np.cross(arr[idx[:, 1]] - p0, arr[idx[:, 2]] - p0)
    offsets = (normals * p0).sum(axis=1)
    values = normals @ arr.T
    lo = values.min(axis=1)
    hi = values.max(axis=1)
    nonzero = (normals != 0).any(axis=1)
    upper = nonzero & (hi == offsets)
    lowerside = nonzero & (lo == offsets)

    facets: dict[IntPoint, int] = {}

    def add(a, b):
        g = gcd(gcd(abs(int(a[0])), abs(int(a[1]))), gcd(abs(int(a[2])), abs(int(b))))
        if g == 0:
            return
        key = (int(a[0]) // g, int(a[1]) // g, int(a[2]) // g)
        facets[key] = int(b) // g

    for t in np.nonzero(upper)[0]:
        add(normals[t], offsets[t])
    for t in np.nonzero(lowerside)[0]:
        add(-normals[t], -offsets[t])

    keys = sorted(facets)
    fnorm = np.array(keys, dtype=np.int64)
    frhs = np.array([facets[k] for k in keys], dtype=np.int64)
    tight = (fnorm @ arr.T) == frhs[:, None]
    verts = set()
    for j in range(v):
        active = [keys[i] for i in np.nonzero(tight[:, j])[0]]
        if len(active) >= 3 and _int_rank(active) == 3:
            verts.add(pts[j])
    return LatticeHull(
        3,
        tuple(keys),
        tuple(int(facets[k]) for k in keys),
        frozenset(verts),
    )
