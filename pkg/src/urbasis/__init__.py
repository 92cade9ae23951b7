"""Unique-representation bases: construction, verification, density bounds.

The package builds sets A of integers in which every integer n has exactly
one representation n = a + a' with a <= a', both from A.  A staged
construction grows such a set two elements at a time; growth policies
control how fast it spreads out, from logarithmic density (greedy) down to
any prescribed slow-growth budget.  An independent brute-force oracle
re-checks everything, and closed-form density bounds are available as
exact predicates.
"""

from .bounds import (
    BoundCheck,
    growth_report,
    halfline_cap,
    halfline_lower,
    log_envelope,
    reach_envelope,
    sqrt_cap,
)
from .construction import (
    BasisTrace,
    ConstructionStep,
    ExplicitReaches,
    Greedy,
    GrowthConfigError,
    GrowthPolicy,
    LogGrowth,
    LogLogGrowth,
    ThresholdReach,
    counting_profile,
    extend,
    initial_state,
    piecewise_count,
    run_greedy,
    run_with_growth,
    table_reach,
)
from .intset import IntSet, min_abs_missing
from .oracle import (
    RepReport,
    Verdict,
    brute_rep_report,
    default_window,
    guaranteed_window,
    pairs_for,
    verify_decomposition,
    verify_gap_growth,
    verify_unique_window,
)
from .tracefile import TraceFormatError, parse, read_file, serialize, write_file

__version__ = "0.1.0"

__all__ = [
    "BasisTrace",
    "BoundCheck",
    "ConstructionStep",
    "ExplicitReaches",
    "Greedy",
    "GrowthConfigError",
    "GrowthPolicy",
    "IntSet",
    "LogGrowth",
    "LogLogGrowth",
    "RepReport",
    "ThresholdReach",
    "TraceFormatError",
    "Verdict",
    "brute_rep_report",
    "counting_profile",
    "default_window",
    "extend",
    "growth_report",
    "guaranteed_window",
    "halfline_cap",
    "halfline_lower",
    "initial_state",
    "log_envelope",
    "min_abs_missing",
    "pairs_for",
    "parse",
    "piecewise_count",
    "reach_envelope",
    "read_file",
    "run_greedy",
    "run_with_growth",
    "serialize",
    "sqrt_cap",
    "table_reach",
    "verify_decomposition",
    "verify_gap_growth",
    "verify_unique_window",
    "write_file",
]
