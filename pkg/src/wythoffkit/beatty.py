"""Exact golden-ratio Beatty sequences.

``beatty_a(n) = floor(n * phi)`` and ``beatty_b(n) = floor(n * phi**2)`` are
evaluated with integer arithmetic only, using

    floor(n * phi) = floor((n + isqrt(5 * n * n)) / 2)

which is exact because ``5 n^2`` is never a perfect square for ``n >= 1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BeattyKind",
    "BeattyClass",
    "beatty_a",
    "beatty_b",
    "classify",
    "classify_by_search",
    "beatty_a_upto",
]

# Keeps 5*n*n and the (r+1)**2 correction step inside int64.
_INT64_LIMIT = math.isqrt(2**62 // 5)


class BeattyKind(str, enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class BeattyClass:
    kind: BeattyKind
    index: int

    def p_position(self) -> tuple[int, int]:
        """The P-position ``(a(n), b(n))`` sharing this index."""
        return beatty_a(self.index), beatty_b(self.index)


def _check_index(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"index must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return n


def beatty_a(n: int) -> int:
    """floor(n * phi), exactly."""
    n = _check_index(n)
    return (n + math.isqrt(5 * n * n)) // 2


def beatty_b(n: int) -> int:
    """floor(n * phi**2) = beatty_a(n) + n."""
    n = _check_index(n)
    return beatty_a(n) + n


def _count_a_upto(v: int) -> int:
    # Number of n >= 1 with floor(n*phi) <= v, i.e. floor((v + 1) / phi).
    # (v+1)/phi = ((v+1)*sqrt5 - (v+1)) / 2 and (v+1)*sqrt5 is irrational.
    w = v + 1
    return (math.isqrt(5 * w * w) - w) // 2


def classify(v: int) -> BeattyClass:
    """Place a positive integer in exactly one of the two Beatty sequences.

    Returns ``BeattyClass(A, n)`` when ``v == beatty_a(n)`` and
    ``BeattyClass(B, n)`` when ``v == beatty_b(n)``.
    """
    v = _check_index(v)
    if v == 0:
        raise ValueError("classify is undefined for 0 (both sequences start at index 0)")
    n = _count_a_upto(v)
    if beatty_a(n) == v:
        return BeattyClass(BeattyKind.A, n)
    # the B-values <= v are exactly the v - n integers not taken by A
    return BeattyClass(BeattyKind.B, v - n)


def classify_by_search(v: int) -> BeattyClass:
    """Linear-search classification; slow, kept as a reference for ``classify``."""
    v = _check_index(v)
    if v == 0:
        raise ValueError("classify is undefined for 0 (both sequences start at index 0)")
    n = 1
    while True:
        a = beatty_a(n)
        if a == v:
            return BeattyClass(BeattyKind.A, n)
        if a + n == v:
            return BeattyClass(BeattyKind.B, n)
        if a > v:
            raise AssertionError(f"{v} escaped both Beatty sequences")
        n += 1


def beatty_a_upto(n_max: int) -> np.ndarray:
    """Vectorised ``[beatty_a(n) for n in range(n_max + 1)]`` as int64.

    The float square root is only a starting guess; it is corrected to the
    exact integer square root before use.
    """
    n_max = _check_index(n_max)
    if n_max > _INT64_LIMIT:
        raise OverflowError(f"n_max={n_max} exceeds the exact int64 range (max {_INT64_LIMIT})")
    n = np.arange(n_max + 1, dtype=np.int64)
    sq = 5 * n * n
    r = np.floor(np.sqrt(sq.astype(np.float64))).astype(np.int64)
    # float rounding can be off by a unit or two near 2**53 and beyond
    for _ in range(3):
        r = np.where(r * r > sq, r - 1, r)
        r = np.where((r + 1) * (r + 1) <= sq, r + 1, r)
    return (n + r) // 2
