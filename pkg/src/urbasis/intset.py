"""Exact finite-set arithmetic over signed integers of any magnitude.

An IntSet is an immutable, strictly increasing tuple of Python ints, so
every operation is a pure function and values are safe to share.  Nothing
here knows about the staged construction; this is the arithmetic kernel
the rest of the package is built on.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class IntSet:
    """Finite set of integers stored as a strictly increasing tuple."""

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        els = self.elements
        if not isinstance(els, tuple):
            object.__setattr__(self, "elements", tuple(els))
            els = self.elements
        for prev, cur in zip(els, els[1:]):
            if prev >= cur:
                raise ValueError(f"elements must be strictly increasing: {prev!r} then {cur!r}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntSet":
        """Build from any iterable, sorting and deduplicating."""
        return cls(tuple(sorted(set(values))))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    def __contains__(self, value: int) -> bool:
        i = bisect_left(self.elements, value)
        return i < len(self.elements) and self.elements[i] == value

    def union(self, values: Iterable[int]) -> "IntSet":
        return IntSet.of(self.elements + tuple(values))

    def sumset(self, other: "IntSet") -> "IntSet":
        """All pairwise sums {a + b : a in self, b in other}."""
        return IntSet.of(a + b for a in self.elements for b in other.elements)

    def self_sumset(self) -> "IntSet":
        return self.sumset(self)

    def translate(self, offset: int) -> "IntSet":
        """The set shifted by a constant; order is preserved."""
        return IntSet(tuple(a + offset for a in self.elements))

    def rep_count(self, n: int) -> int:
        """Number of pairs a <= a' from the set with a + a' = n."""
        count = 0
        for a in self.elements:
            if 2 * a > n:
                break
            if (n - a) in self:
                count += 1
        return count

    def counting(self, lo: int, hi: int) -> int:
        """Number of elements in the closed interval [lo, hi]."""
        if lo > hi:
            raise ValueError(f"invalid range: lo={lo} exceeds hi={hi}")
        return bisect_right(self.elements, hi) - bisect_left(self.elements, lo)

    def max_abs(self) -> int:
        """Largest absolute value present.  Undefined (raises) on the empty set."""
        if not self.elements:
            raise ValueError("max_abs is undefined for the empty set")
        return max(-self.elements[0], self.elements[-1])


def min_abs_missing(sums: IntSet) -> tuple[int, bool]:
    """Smallest positive b such that b or -b is absent from `sums`.

    Returns (b, positive_missing); positive_missing is True exactly when +b
    is absent, which is also the tie-break when both signs are absent.  The
    caller is expected to pass a pairwise-sum set containing 0, so the scan
    starts at 1; it terminates because the set is finite.
    """
    b = 1
    while b in sums and -b in sums:
        b += 1
    return b, b not in sums
