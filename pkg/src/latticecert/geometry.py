"""Exact rational vectors, linear inequalities, and polyhedra.

Every scalar in this package is an arbitrary-precision rational
(``fractions.Fraction``).  There is deliberately no floating point
anywhere: all comparisons are exact, so statements like "this polyhedron
contains exactly k integer points" are decidable facts, not numerics.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


class PreconditionError(ValueError):
    """A documented operation precondition was violated by the caller."""


class PostconditionError(AssertionError):
    """An operation's guaranteed postcondition failed.

    These guarantees are theorems; a raise here means either a bug in the
    implementation or a genuine counterexample, and is surfaced as a
    distinct, loud failure rather than a silent wrong answer.
    """


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal: optional sign, integer, optional /denominator.

    The denominator, when present, must be a positive decimal integer.
    Non-lowest terms are accepted ("4/6" parses to 2/3).  Whitespace,
    decimal points, and exponents are rejected.
    """
    if not isinstance(text, str) or _RATIONAL_RE.fullmatch(text) is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den:
        d = int(den)
        if d == 0:
            raise ValueError(f"zero denominator in rational literal: {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(num))


def format_rational(value: Fraction | int) -> str:
    """Emit a rational in canonical form: lowest terms, sign on the numerator."""
    return str(Fraction(value))


def as_vector(coords: Iterable) -> Vector:
    return tuple(Fraction(c) for c in coords)


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"dot of lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class Relation(Enum):
    """How a point sits relative to a single inequality a.x <= beta."""

    STRICTLY_SATISFIED = "strictly_satisfied"
    TIGHT = "tight"
    VIOLATED = "violated"


@dataclass(frozen=True)
class LinearInequality:
    """A halfspace constraint a.x <= beta with a nonzero rational normal."""

    a: Vector
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_vector(self.a))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if all(c == 0 for c in self.a):
            raise ValueError("zero normal vector is rejected at construction")

    @property
    def dim(self) -> int:
        return len(self.a)

    def value_at(self, point: Sequence) -> Fraction:
        return dot(self.a, point)

    def classify(self, point: Sequence) -> Relation:
        v = self.value_at(point)
        if v < self.beta:
            return Relation.STRICTLY_SATISFIED
        if v == self.beta:
            return Relation.TIGHT
        return Relation.VIOLATED

    def negated(self) -> "LinearInequality":
        """The inequality -a.x <= beta (not the complement halfspace)."""
        return LinearInequality(tuple(-c for c in self.a), self.beta)

    def to_json_dict(self) -> dict:
        return {
            "a": [format_rational(c) for c in self.a],
            "b": format_rational(self.beta),
        }


def evaluate(ineq: LinearInequality, point: Sequence) -> Relation:
    """Classify a point against one inequality by exact comparison."""
    if len(point) != ineq.dim:
        raise DimensionMismatch(
            f"point has length {len(point)}, inequality expects {ineq.dim}"
        )
    return ineq.classify(point)


@dataclass(frozen=True)
class Polyhedron:
    """A finite system of inequalities A x <= b with stable row order.

    Row indices are meaningful: certificates and witnesses refer to
    constraints by position, so the order given at construction is kept.
    """

    n: int
    ineqs: tuple[LinearInequality, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be >= 1")
        object.__setattr__(self, "ineqs", tuple(self.ineqs))
        for ineq in self.ineqs:
            if ineq.dim != self.n:
                raise DimensionMismatch(
                    f"inequality of dimension {ineq.dim} in R^{self.n}"
                )

    @property
    def m(self) -> int:
        return len(self.ineqs)

    def subsystem(self, indices: Iterable[int]) -> "Polyhedron":
        idx = sorted(indices)
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate constraint indices: {idx}")
        for i in idx:
            if not 0 <= i < self.m:
                raise IndexError(f"constraint index {i} out of range 0..{self.m - 1}")
        return Polyhedron(self.n, tuple(self.ineqs[i] for i in idx))

    def drop(self, index: int) -> "Polyhedron":
        return self.subsystem(i for i in range(self.m) if i != index)

    def contains(self, point: Sequence) -> bool:
        return all(q.classify(point) is not Relation.VIOLATED for q in self.ineqs)

    def strictly_contains(self, point: Sequence) -> bool:
        return all(
            q.classify(point) is Relation.STRICTLY_SATISFIED for q in self.ineqs
        )

    def tight_rows(self, point: Sequence) -> tuple[int, ...]:
        return tuple(
            i for i, q in enumerate(self.ineqs) if q.classify(point) is Relation.TIGHT
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "inequalities": [q.to_json_dict() for q in self.ineqs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polyhedron":
        try:
            n = data["n"]
            raw = data["inequalities"]
        except (TypeError, KeyError) as exc:
            raise ValueError(f"polyhedron JSON missing field: {exc}") from exc
        if not isinstance(n, int):
            raise ValueError(f"dimension must be an integer, got {n!r}")
        ineqs = []
        for row in raw:
            a = [parse_rational(c) for c in row["a"]]
            beta = parse_rational(row["b"])
            ineqs.append(LinearInequality(tuple(a), beta))
        return cls(n, tuple(ineqs))


def polyhedron_to_json(poly: Polyhedron) -> str:
    return json.dumps(poly.to_json_dict(), separators=(",", ":"))


def polyhedron_from_json(text: str) -> Polyhedron:
    return Polyhedron.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class IntegerBox:
    """An axis-aligned integer box, lower[i] <= x_i <= upper[i]."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(int(v) for v in self.lower))
        object.__setattr__(self, "upper", tuple(int(v) for v in self.upper))
        if len(self.lower) != len(self.upper):
            raise DimensionMismatch("box bound vectors differ in length")
        for lo, hi in zip(self.lower, self.upper):
            if lo > hi:
                raise ValueError(f"empty box range [{lo}, {hi}]")

    @property
    def dim(self) -> int:
        return len(self.lower)

    def volume(self) -> int:
        v = 1
        for lo, hi in zip(self.lower, self.upper):
            v *= hi - lo + 1
        return v

    def iter_points(self):
        """All integer points, lexicographically."""

        def rec(prefix, k):
            if k == self.dim:
                yield tuple(prefix)
                return
            for v in range(self.lower[k], self.upper[k] + 1):
                prefix.append(v)
                yield from rec(prefix, k + 1)
                prefix.pop()

        yield from rec([], 0)

    def to_json_dict(self) -> dict:
        return {"lower": list(self.lower), "upper": list(self.upper)}
