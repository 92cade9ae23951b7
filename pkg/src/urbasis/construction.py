"""Staged construction of unique-representation sets.

Starting from {0, 1}, each stage adds one pair of far-out elements whose
sum is the smallest +-value not yet expressible, so every integer
eventually gets exactly one representation a + a' (a <= a').  How far out
the pair lands is the per-stage "reach"; choosing it as small as possible
gives logarithmic density, choosing it huge makes the set as sparse as
desired.  Growth policies encapsulate that choice.
"""

from __future__ import annotations

import mpmath

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Mapping, Union

from .intset import IntSet, min_abs_missing


class GrowthConfigError(ValueError):
    """A growth policy cannot produce a reach for the requested stage."""


@dataclass(frozen=True)
class ConstructionStep:
    """One stage of the construction.

    k               stage index, starting at 1
    basis           the set built so far (2k elements)
    radius          largest absolute value in basis
    gap             smallest |n| not yet realized as a pairwise sum
    positive_branch True when +gap is the missing value (else -gap is)
    reach           placement scale used to extend this stage; None on a
                    stage that has not been extended
    """

    k: int
    basis: IntSet
    radius: int
    gap: int
    positive_branch: bool
    reach: int | None = None

    def sums(self) -> IntSet:
        return self.basis.self_sumset()

    def validate(self) -> None:
        """Raise ValueError if the stage's bookkeeping is inconsistent."""
        if self.k < 1:
            raise ValueError(f"stage index must be >= 1, got {self.k}")
        if len(self.basis) != 2 * self.k:
            raise ValueError(f"stage {self.k} should hold {2 * self.k} elements, has {len(self.basis)}")
        if self.radius != self.basis.max_abs():
            raise ValueError(f"stage {self.k} radius {self.radius} != max |a| = {self.basis.max_abs()}")
        if self.radius in self.basis and -self.radius in self.basis:
            raise ValueError(f"stage {self.k} contains both +-{self.radius}")
        sums = self.sums()
        gap, positive = min_abs_missing(sums)
        if (gap, positive) != (self.gap, self.positive_branch):
            raise ValueError(
                f"stage {self.k} records gap={self.gap} "
                f"({'+' if self.positive_branch else '-'}), recomputed {gap} ({'+' if positive else '-'})"
            )
        if not 1 <= self.gap <= 2 * self.radius - 1:
            raise ValueError(f"stage {self.k} gap {self.gap} outside [1, {2 * self.radius - 1}]")
        if self.reach is not None and self.reach < self.radius:
            raise ValueError(f"stage {self.k} reach {self.reach} below radius {self.radius}")


@dataclass(frozen=True)
class BasisTrace:
    """A finished run: stages 1..K in order, plus the policy descriptor."""

    steps: tuple[ConstructionStep, ...]
    mode: str = ""

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("a trace needs at least one stage")
        for i, step in enumerate(self.steps):
            if step.k != i + 1:
                raise ValueError(f"stage indices must run 1..K without gaps; position {i} holds k={step.k}")

    @property
    def final(self) -> ConstructionStep:
        return self.steps[-1]

    def step(self, k: int) -> ConstructionStep:
        return self.steps[k - 1]


def initial_state() -> ConstructionStep:
    """Stage 1: the seed set {0, 1}."""
    basis = IntSet((0, 1))
    gap, positive = min_abs_missing(basis.self_sumset())
    return ConstructionStep(k=1, basis=basis, radius=1, gap=gap, positive_branch=positive)


def extend(step: ConstructionStep, reach: int, *, check_unique: bool = True) -> ConstructionStep:
    """Extend one stage: place the pair realizing the missing value +-gap.

    The two new elements are {gap + 3*reach, -3*reach} when +gap is missing
    and the negated pair otherwise; reach must be at least the current
    radius.  With check_unique on, a pairwise-distinct-sums check runs on
    the result (equivalent to rep_count <= 1 everywhere) and an internal
    failure raises, since it would mean a bug rather than bad input.
    """
    if reach < step.radius:
        raise ValueError(f"reach {reach} below radius {step.radius} at stage {step.k}")
    far = step.gap + 3 * reach
    if step.positive_branch:
        new = (-3 * reach, far)
    else:
        new = (-far, 3 * reach)
    basis = step.basis.union(new)
    if len(basis) != len(step.basis) + 2 or basis.max_abs() != far:
        raise RuntimeError(f"extension of stage {step.k} misplaced its new pair")
    sums = basis.self_sumset()
    if check_unique:
        n = len(basis)
        if len(sums) != n * (n + 1) // 2:
            raise RuntimeError(f"extension of stage {step.k} collided two pairwise sums")
    gap, positive = min_abs_missing(sums)
    return ConstructionStep(
        k=step.k + 1, basis=basis, radius=far, gap=gap, positive_branch=positive
    )


# --- growth policies -------------------------------------------------------


@dataclass(frozen=True)
class Greedy:
    """Smallest admissible reach at every stage: reach = radius."""

    @property
    def descriptor(self) -> str:
        return "greedy"

    def reach_for(self, step: ConstructionStep) -> int:
        return step.radius


@dataclass(frozen=True)
class ExplicitReaches:
    """A fixed list of reaches, one per extension, in stage order."""

    values: tuple[int, ...]

    @property
    def descriptor(self) -> str:
        return "explicit:" + ",".join(str(v) for v in self.values)

    def reach_for(self, step: ConstructionStep) -> int:
        if step.k > len(self.values):
            raise GrowthConfigError(
                f"reach list has {len(self.values)} entries, none for stage {step.k}"
            )
        return self.values[step.k - 1]


@dataclass(frozen=True)
class ThresholdReach:
    """Reach from a target-indexed threshold map.

    `threshold(m)` is the least x from which the caller's growth budget
    allows m elements in [-x, x]; extending stage k must keep the count
    below 2k + 2, so reach = max(radius, threshold(2k + 2)).  The map must
    be nondecreasing; that is checked as stages are visited in order.
    """

    threshold: Callable[[int], int]
    label: str = "threshold"
    _seen: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def descriptor(self) -> str:
        return self.label

    def reach_for(self, step: ConstructionStep) -> int:
        m = 2 * step.k + 2
        t = int(self.threshold(m))
        prev = self._seen.get(m - 2)
        if prev is not None and t < prev:
            raise GrowthConfigError(f"threshold map decreases: t({m})={t} < t({m - 2})={prev}")
        self._seen[m] = t
        return max(step.radius, t)


GrowthPolicy = Union[Greedy, ExplicitReaches, ThresholdReach]


def table_reach(table: Mapping[int, int], label: str | None = None) -> ThresholdReach:
    """ThresholdReach backed by an explicit {target: least x} table."""
    frozen = dict(table)

    def lookup(m: int) -> int:
        if m not in frozen:
            raise GrowthConfigError(f"threshold table has no entry for target {m}")
        return frozen[m]

    if label is None:
        label = "table:" + ";".join(f"{m}:{x}" for m, x in sorted(frozen.items()))
    return ThresholdReach(lookup, label)


# --- built-in growth-budget families ---------------------------------------

_EVAL_DPS = 60  # enough headroom that comparisons against integer targets are faithful


def _least_at_least(f: Callable[[int], mpmath.mpf], target: int) -> int:
    """Smallest integer x >= 1 with f(x) >= target, for nondecreasing f."""
    if f(1) >= target:
        return 1
    lo, hi = 1, 2
    while f(hi) < target:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if f(mid) >= target:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class LogGrowth:
    """Budget f(x) = scale * ln(x) + offset, for x >= 1."""

    scale: float = 1.0
    offset: float = 0.0

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError("scale must be positive for an unbounded budget")

    @property
    def descriptor(self) -> str:
        return f"log,{self.scale:g},{self.offset:g}"

    def value(self, x: int) -> mpmath.mpf:
        if x < 1:
            raise ValueError(f"budget defined for x >= 1, got {x}")
        with mpmath.workdps(_EVAL_DPS):
            return mpmath.mpf(self.scale) * mpmath.ln(mpmath.mpf(x)) + self.offset

    def threshold(self, m: int) -> int:
        return _least_at_least(self.value, m)

    def policy(self) -> ThresholdReach:
        return ThresholdReach(self.threshold, "threshold:" + self.descriptor)


@dataclass(frozen=True)
class LogLogGrowth:
    """Budget f(x) = scale * ln(ln(x + shift)) + offset, for x >= 1.

    shift >= 1 keeps the inner log above 0 on the whole domain.
    """

    scale: float = 1.0
    offset: float = 0.0
    shift: int = 3

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError("scale must be positive for an unbounded budget")
        if self.shift < 1:
            raise ValueError("shift must be >= 1 to keep the inner log positive")

    @property
    def descriptor(self) -> str:
        return f"loglog,{self.scale:g},{self.offset:g},{self.shift}"

    def value(self, x: int) -> mpmath.mpf:
        if x < 1:
            raise ValueError(f"budget defined for x >= 1, got {x}")
        with mpmath.workdps(_EVAL_DPS):
            return mpmath.mpf(self.scale) * mpmath.ln(mpmath.ln(mpmath.mpf(x) + self.shift)) + self.offset

    def threshold(self, m: int) -> int:
        return _least_at_least(self.value, m)

    def policy(self) -> ThresholdReach:
        return ThresholdReach(self.threshold, "threshold:" + self.descriptor)


# --- drivers ----------------------------------------------------------------


def run_with_growth(policy: GrowthPolicy, k_max: int, *, check_unique: bool = True) -> BasisTrace:
    """Run the construction through stage k_max under the given policy.

    Stages 1..k_max-1 carry the reach that extended them; the final stage
    carries none.  Reaches below the stage radius are rejected by extend,
    naming the stage.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    step = initial_state()
    steps: list[ConstructionStep] = []
    while step.k < k_max:
        reach = policy.reach_for(step)
        steps.append(replace(step, reach=reach))
        step = extend(step, reach, check_unique=check_unique)
    steps.append(step)
    return BasisTrace(steps=tuple(steps), mode=policy.descriptor)


def run_greedy(k_max: int, *, check_unique: bool = True) -> BasisTrace:
    """Densest variant: reach = radius at every stage."""
    return run_with_growth(Greedy(), k_max, check_unique=check_unique)


def counting_profile(trace: BasisTrace, x: int) -> int:
    """Number of final-stage elements in [-x, x], for x at least the seed radius."""
    first = trace.steps[0].radius
    if x < first:
        raise ValueError(f"x must be >= {first}, got {x}")
    return trace.final.basis.counting(-x, x)


def piecewise_count(trace: BasisTrace, x: int) -> int:
    """The count implied by stage bookkeeping alone, without scanning the set.

    Between consecutive radii the count is 2k until the first new element
    lands at 3*reach, then 2k + 1 until the next radius; from the final
    radius on it stays 2K.  For valid traces this always agrees with
    counting_profile, and the test suite enforces that.
    """
    first = trace.steps[0].radius
    if x < first:
        raise ValueError(f"x must be >= {first}, got {x}")
    for step, nxt in zip(trace.steps, trace.steps[1:]):
        if step.radius <= x < nxt.radius:
            assert step.reach is not None
            return 2 * step.k if x < 3 * step.reach else 2 * step.k + 1
    return 2 * trace.final.k
