"""Closed-form bounds on certificate sizes, in exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def c_upper(n: int, k: int) -> int:
    """Upper bound on the minimal certificate size for k integer points in R^n."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if k < 0:
        raise ValueError("point count must be >= 0")
    q = _ceil_div(2 * (k + 1), 3)
    return q * 2**n - 2 * q + 2


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    upper: int
    exact_known: int | None
    tight: str  # "tight" | "not_tight" | "unknown"

    def __post_init__(self):
        if self.exact_known is not None and self.exact_known > self.upper:
            raise ValueError("known exact value cannot exceed the upper bound")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "upper": self.upper,
            "exact": self.exact_known,
            "tight": self.tight,
        }


def c_report(n: int, k: int) -> BoundReport:
    """Bound plus what is known about sharpness.

    Exact values exist for k = 0 (the classic 2^n) and k = 1 (2(2^n - 1),
    both tight).  In the plane the bound is known not to be tight for
    k >= 3; everything else is open.
    """
    upper = c_upper(n, k)
    if k == 0:
        return BoundReport(n, k, upper, 2**n, "tight")
    if k == 1:
        return BoundReport(n, k, upper, 2 * (2**n - 1), "tight")
    if n == 2 and k >= 3:
        return BoundReport(n, k, upper, None, "not_tight")
    return BoundReport(n, k, upper, None, "unknown")


def floor_identity(k: int) -> tuple[int, str]:
    """Evaluate floor((3/2) * ceil(2(k+1)/3)) and classify it.

    The value is k+1 when k = 0,2 (mod 3) and k+2 when k = 1 (mod 3);
    the classification is recomputed from k mod 3 and cross-checked
    against the arithmetic before returning.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    q = _ceil_div(2 * (k + 1), 3)
    value = (3 * q) // 2
    classification = "k_plus_2" if k % 3 == 1 else "k_plus_1"
    expected = k + 2 if classification == "k_plus_2" else k + 1
    if value != expected:
        raise AssertionError(
            f"floor identity broke at k={k}: value {value}, expected {expected}"
        )
    return value, classification
