"""Brute-force verification, kept independent of the arithmetic kernel.

Every check here recounts pair sums with its own explicit double loop
rather than calling IntSet.sumset or IntSet.rep_count, so agreement
between this module and the kernel is evidence, not tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .construction import BasisTrace, ConstructionStep
from .intset import IntSet


def _witness_order(n: int) -> tuple[int, bool]:
    # smallest |n| first, +n before -n on ties
    return (abs(n), n < 0)


def _pair_counts(elements: tuple[int, ...], lo: int | None = None, hi: int | None = None) -> dict[int, int]:
    """Count every unordered pair sum a + a' (a <= a') by explicit enumeration."""
    counts: dict[int, int] = {}
    for i, a in enumerate(elements):
        for b in elements[i:]:
            s = a + b
            if lo is not None and (s < lo or s > hi):
                continue
            counts[s] = counts.get(s, 0) + 1
    return counts


def pairs_for(a: IntSet, n: int) -> list[tuple[int, int]]:
    """All pairs a1 <= a2 from the set with a1 + a2 = n, by explicit enumeration."""
    return _element_pairs_for(a.elements, n)


def _element_pairs_for(elements: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    return [
        (a, b)
        for i, a in enumerate(elements)
        for b in elements[i:]
        if a + b == n
    ]


@dataclass(frozen=True)
class RepReport:
    """Pair-sum counts over a window [lo, hi].

    `nonzero` holds only sums that occur; zero counts are implicit, which
    keeps reports usable for windows far too wide to materialize.  The
    dense `counts` mapping and the `gaps` list are built on demand and are
    meant for small windows only.
    """

    lo: int
    hi: int
    nonzero: Mapping[int, int]

    def count(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise ValueError(f"{n} outside window [{self.lo}, {self.hi}]")
        return self.nonzero.get(n, 0)

    @property
    def counts(self) -> dict[int, int]:
        return {n: self.nonzero.get(n, 0) for n in range(self.lo, self.hi + 1)}

    @property
    def violations(self) -> tuple[int, ...]:
        return tuple(sorted((n for n, c in self.nonzero.items() if c >= 2), key=_witness_order))

    @property
    def gaps(self) -> tuple[int, ...]:
        absent = (n for n in range(self.lo, self.hi + 1) if n not in self.nonzero)
        return tuple(sorted(absent, key=_witness_order))

    @property
    def gap_count(self) -> int:
        present = sum(1 for n in self.nonzero if self.lo <= n <= self.hi)
        return (self.hi - self.lo + 1) - present


def brute_rep_report(a: IntSet, lo: int, hi: int) -> RepReport:
    """Exhaustively count pair sums of `a` landing in [lo, hi]."""
    if lo > hi:
        raise ValueError(f"invalid window: lo={lo} exceeds hi={hi}")
    return RepReport(lo=lo, hi=hi, nonzero=_pair_counts(a.elements, lo, hi))


def default_window(trace: BasisTrace) -> tuple[int, int]:
    """The widest window any pair sum of the final stage can reach."""
    r = trace.final.radius
    return (-2 * r, 2 * r)


def guaranteed_window(trace: BasisTrace) -> tuple[int, int]:
    """Window in which the construction promises exactly one representation."""
    half = trace.final.k // 2
    return (-half, half)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one verification, with a witness when it fails."""

    ok: bool
    check: str
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_unique_window(trace: BasisTrace) -> Verdict:
    """No sum is ever repeated, and stage 2k covers all of [-k, k] exactly once."""
    for step in trace.steps:
        counts = _pair_counts(step.basis.elements)
        doubled = [n for n, c in counts.items() if c >= 2]
        if doubled:
            n = min(doubled, key=_witness_order)
            return Verdict(False, "unique-window", {
                "reason": "repeated-sum",
                "stage": step.k,
                "n": n,
                "pairs": _element_pairs_for(step.basis.elements, n),
            })
    for step in trace.steps:
        if step.k % 2:
            continue
        half = step.k // 2
        counts = _pair_counts(step.basis.elements, -half, half)
        missing = [n for n in range(-half, half + 1) if counts.get(n, 0) != 1]
        if missing:
            n = min(missing, key=_witness_order)
            return Verdict(False, "unique-window", {
                "reason": "uncovered",
                "stage": step.k,
                "n": n,
                "count": counts.get(n, 0),
            })
    return Verdict(True, "unique-window")


def verify_decomposition(prev: ConstructionStep, nxt: ConstructionStep) -> Verdict:
    """The new sums split into three disjoint picture pieces.

    With e1, e2 the two added elements, the sums of the extended stage must
    be exactly  old sums  |_|  (old set + e1)  |_|  (old set + e2)  |_|
    {2*e1, e1 + e2, 2*e2},  all four pairwise disjoint.  Inputs that are
    not a legal extension (wrong stage index, added pair off the branch
    rule, reach below radius) are refused with ValueError rather than
    reported as failures.
    """
    if nxt.k != prev.k + 1:
        raise ValueError(f"stages are not consecutive: {prev.k} then {nxt.k}")
    prev_set = set(prev.basis.elements)
    nxt_set = set(nxt.basis.elements)
    if not prev_set <= nxt_set or len(nxt_set) != len(prev_set) + 2:
        raise ValueError("next stage does not extend the previous one by exactly two elements")
    added = sorted(nxt_set - prev_set)
    e_neg, e_pos = added
    if e_neg >= 0 or e_pos <= 0:
        raise ValueError(f"added pair {added} is not one negative and one positive element")
    if prev.positive_branch:
        anchor, reach3 = e_pos, -e_neg
    else:
        anchor, reach3 = -e_neg, e_pos
    if reach3 % 3 != 0 or anchor != prev.gap + reach3:
        raise ValueError(f"added pair {added} does not follow the branch rule for gap {prev.gap}")
    reach = reach3 // 3
    if reach < prev.radius:
        raise ValueError(f"implied reach {reach} below radius {prev.radius}: extension precondition violated")

    old = prev.basis.elements
    parts = {
        "old-sums": set(_pair_counts(old)),
        "shift-by-first": {a + e_neg for a in old},
        "shift-by-second": {a + e_pos for a in old},
        "new-pair-sums": {2 * e_neg, e_neg + e_pos, 2 * e_pos},
    }
    names = list(parts)
    for i, p in enumerate(names):
        for q in names[i + 1:]:
            overlap = parts[p] & parts[q]
            if overlap:
                n = min(overlap, key=_witness_order)
                return Verdict(False, "decomposition", {
                    "reason": "overlap", "stage": nxt.k, "n": n, "parts": [p, q],
                })
    union = set().union(*parts.values())
    full = set(_pair_counts(nxt.basis.elements))
    if union != full:
        n = min(union ^ full, key=_witness_order)
        return Verdict(False, "decomposition", {
            "reason": "union-mismatch",
            "stage": nxt.k,
            "n": n,
            "in_union": n in union,
        })
    return Verdict(True, "decomposition")


def verify_gap_growth(trace: BasisTrace) -> Verdict:
    """The gap sequence starts where it must and keeps climbing.

    Checks: gap at stage 2 equals 2; gap(k) < gap(k+2); gap(2k) >= k + 1.
    The last one is what makes stage 2k cover all of [-k, k].
    """
    gaps = [s.gap for s in trace.steps]
    if len(gaps) < 2:
        raise ValueError("gap growth needs at least two stages")
    if gaps[1] != 2:
        return Verdict(False, "gap-growth", {"rule": "stage-2-gap", "stage": 2, "gap": gaps[1]})
    for i in range(len(gaps) - 2):
        if not gaps[i] < gaps[i + 2]:
            return Verdict(False, "gap-growth", {
                "rule": "two-apart-increase", "stage": i + 1,
                "gap": gaps[i], "gap_two_later": gaps[i + 2],
            })
    for k in range(1, len(gaps) // 2 + 1):
        if gaps[2 * k - 1] < k + 1:
            return Verdict(False, "gap-growth", {
                "rule": "even-stage-floor", "k": k, "gap": gaps[2 * k - 1],
            })
    return Verdict(True, "gap-growth")
