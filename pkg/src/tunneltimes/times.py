"""Tunneling-time observables: dwell, self-interference and group times.

All times are returned in units of the light-crossing time tau0 = a/c.
The group time is the constructed sum of the dwell and self-interference
parts.  Finite-width expressions guard against overflow of the evanescent
exponent and switch callers to the wide-barrier limits instead; the two
agree to double precision well before the guard triggers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import OverflowGuard
from .kinematics import OVERFLOW_QA, BarrierSpec, Regime, kinematics
from .scattering import balanced_bprime


@dataclass(frozen=True)
class TimeSet:
    """Spin-degenerate times in tau0 units."""

    tau_d: float
    tau_i: float
    tau_g: float


@dataclass(frozen=True)
class SpinTimeSet:
    """Spin-resolved times in tau0 units.

    tau_g sums both dwell channels and the interference part; tau_g_up is
    the spin-up-only total.
    """

    tau_d_up: float
    tau_d_down: float
    tau_i: float
    tau_g: float
    tau_g_up: float


def _guard(spec: BarrierSpec, wide: bool):
    if wide:
        return
    q = kinematics(spec).q
    if q > OVERFLOW_QA:
        raise OverflowGuard(q, OVERFLOW_QA)


def _bprime_args(spec: BarrierSpec, bprime):
    """Map the bprime argument to a kernel mode.

    None selects the balanced injection (|g| = |f| at every width), a
    complex/float value is used by magnitude (only |bprime| enters the
    times).
    """
    if bprime is None:
        return kernels.BPRIME_BALANCED, 0.0
    mag = abs(bprime)
    if mag == 0.0:
        return kernels.BPRIME_ZERO, 0.0
    return kernels.BPRIME_EXPLICIT, mag


def times(spec: BarrierSpec, wide: bool = False, bprime: complex | None = 0j):
    """Times for one spec; TimeSet or SpinTimeSet depending on the regime."""
    _guard(spec, wide)
    e = np.array([spec.eps])
    if spec.regime is Regime.RELATIVISTIC:
        td, ti, tg = kernels.rel_times_grid(spec.u, spec.mu_ratio, e, wide)
        return TimeSet(float(td[0]), float(ti[0]), float(tg[0]))
    if spec.regime is Regime.NONRELATIVISTIC:
        td, ti, tg = kernels.nonrel_times_grid(spec.u, spec.mu_ratio, e, wide)
        return TimeSet(float(td[0]), float(ti[0]), float(tg[0]))
    bmode, bmag = _bprime_args(spec, bprime)
    tdu, tdd, ti, tg, tgu = kernels.srel_times_grid(
        spec.u, spec.mu_ratio, e, wide, bmode, bmag
    )
    return SpinTimeSet(
        float(tdu[0]), float(tdd[0]), float(ti[0]), float(tg[0]), float(tgu[0])
    )


def times_grid(
    spec: BarrierSpec,
    eps: Sequence[float] | np.ndarray,
    wide: bool = False,
    bprime: complex | None = 0j,
) -> dict[str, np.ndarray]:
    """Vectorized times over an eps grid; spec.eps is ignored.

    Returns named columns matching the CSV layout of the sweep command.
    """
    eps = np.asarray(eps, dtype=float)
    if eps.size and (eps.min() <= 0.0 or eps.max() >= 1.0):
        raise ValueError("eps grid must lie strictly inside (0, 1)")
    if eps.size:
        # validate the regime domain at the grid extremes; q and the root
        # arguments are monotone in eps, so the extremes bound the grid
        qmax = max(
            kinematics(replace(spec, eps=float(e))).q for e in (eps.min(), eps.max())
        )
        if not wide and qmax > OVERFLOW_QA:
            raise OverflowGuard(qmax, OVERFLOW_QA)
    if spec.regime is Regime.RELATIVISTIC:
        td, ti, tg = kernels.rel_times_grid(spec.u, spec.mu_ratio, eps, wide)
        return {"eps": eps, "tau_d": td, "tau_i": ti, "tau_g": tg}
    if spec.regime is Regime.NONRELATIVISTIC:
        td, ti, tg = kernels.nonrel_times_grid(spec.u, spec.mu_ratio, eps, wide)
        return {"eps": eps, "tau_d": td, "tau_i": ti, "tau_g": tg}
    bmode, bmag = _bprime_args(spec, bprime)
    tdu, tdd, ti, tg, tgu = kernels.srel_times_grid(
        spec.u, spec.mu_ratio, eps, wide, bmode, bmag
    )
    return {
        "eps": eps,
        "tau_g": tg,
        "tau_g_up": tgu,
        "tau_d_up": tdu,
        "tau_d_down": tdd,
        "tau_i": ti,
    }


def hartman_scan(
    spec: BarrierSpec,
    u_values: Iterable[float],
    bprime: complex | None = None,
) -> list[tuple[float, TimeSet | SpinTimeSet]]:
    """Times at fixed (mu_ratio, eps) across barrier widths.

    In the superrelativistic regime the default bprime=None uses the
    balanced injection so the spin-down channel has a width-stable weight;
    otherwise its dwell time decays with the transmitted spin-down
    amplitude.
    """
    out = []
    for u in u_values:
        s = replace(spec, u=u)
        out.append((u, times(s, bprime=bprime)))
    return out


def wide_limit(spec: BarrierSpec, bprime: complex | None = None):
    """Width-independent saturation values of the times."""
    return times(spec, wide=True, bprime=bprime)
