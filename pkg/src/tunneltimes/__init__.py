"""Relativistic tunneling times for a rectangular barrier.

Closed-form dwell, self-interference and group times across three energy
regimes, with independent numerical oracles and a sweep/figure CLI.
"""

__version__ = "0.1.0"

from .errors import (
    NonPositiveRootArgument,
    OverflowGuard,
    SingularMatching,
    StencilOutOfDomain,
    TunnelTimesError,
)
from .kinematics import OVERFLOW_QA, BarrierSpec, Kinematics, Regime, kinematics
from .scattering import (
    CoefficientSet,
    Region,
    SpinCoefficientSet,
    balanced_bprime,
    probability_current,
    solve,
    solve_relativistic,
    solve_superrel,
    wavefunction_at,
)
from .times import SpinTimeSet, TimeSet, hartman_scan, times, times_grid, wide_limit

__all__ = [
    "BarrierSpec",
    "CoefficientSet",
    "Kinematics",
    "NonPositiveRootArgument",
    "OVERFLOW_QA",
    "OverflowGuard",
    "Region",
    "Regime",
    "SingularMatching",
    "SpinCoefficientSet",
    "SpinTimeSet",
    "StencilOutOfDomain",
    "TimeSet",
    "TunnelTimesError",
    "balanced_bprime",
    "hartman_scan",
    "kinematics",
    "probability_current",
    "solve",
    "solve_relativistic",
    "solve_superrel",
    "times",
    "times_grid",
    "wavefunction_at",
    "wide_limit",
]
