"""Independent numerical cross-checks for the closed-form results.

Nothing here reuses the closed-form time expressions: phases are
differentiated numerically (or symbolically, in the analytic variants),
dwell times come from quadrature over the barrier interior, and the
boundary matching is re-solved as a dense linear system.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .errors import SingularMatching, StencilOutOfDomain
from .kinematics import BarrierSpec, Regime, kinematics
from .scattering import (
    CoefficientSet,
    Region,
    SpinCoefficientSet,
    probability_current,
    solve,
    solve_superrel,
    wavefunction_at,
)


class FDScheme(Enum):
    CENTRAL2 = 2
    CENTRAL4 = 4


@dataclass(frozen=True)
class FDConfig:
    """Finite-difference settings for energy derivatives of phases."""

    step: float = 1e-5
    scheme: FDScheme = FDScheme.CENTRAL4
    unwrap: bool = True

    def __post_init__(self):
        if not (1e-10 < self.step < 1e-2):
            raise ValueError(f"step must lie in (1e-10, 1e-2), got {self.step}")


class QuadRule(Enum):
    GAUSS_LEGENDRE = "gauss-legendre"
    SIMPSON = "simpson"


@dataclass(frozen=True)
class QuadratureConfig:
    """Quadrature settings for barrier-interior integrals."""

    n_points: int = 128
    rule: QuadRule = QuadRule.GAUSS_LEGENDRE

    def __post_init__(self):
        if self.n_points < 16:
            raise ValueError(f"n_points must be >= 16, got {self.n_points}")


def _nodes(cfg: QuadratureConfig):
    """Nodes and weights on [0, 1]."""
    if cfg.rule is QuadRule.GAUSS_LEGENDRE:
        x, w = np.polynomial.legendre.leggauss(cfg.n_points)
        return 0.5 * (x + 1.0), 0.5 * w
    n = cfg.n_points if cfg.n_points % 2 == 1 else cfg.n_points + 1
    x = np.linspace(0.0, 1.0, n)
    h = x[1] - x[0]
    w = np.full(n, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    return x, w * h / 3.0


def _stencil(eps: float, cfg: FDConfig):
    h = cfg.step
    if cfg.scheme is FDScheme.CENTRAL2:
        offs = (-1, 1)
        coeff = {-1: -0.5, 1: 0.5}
    else:
        offs = (-2, -1, 1, 2)
        coeff = {-2: 1.0 / 12.0, -1: -8.0 / 12.0, 1: 8.0 / 12.0, 2: -1.0 / 12.0}
    pts = [eps + o * h for o in offs]
    if min(pts) <= 0.0 or max(pts) >= 1.0:
        raise StencilOutOfDomain(eps, h)
    return offs, coeff, pts


def _phase(spec: BarrierSpec, channel: str) -> float:
    c = solve(spec)
    return c.phase_t if channel == "T" else c.phase_r


def phase_time_fd(spec: BarrierSpec, channel: str = "T", cfg: FDConfig | None = None) -> float:
    """Group delay hbar*d(phase)/dE of a channel, in tau0 units.

    channel is "T" (transmission) or "R" (reflection).  The stencil phases
    are unwrapped before differencing unless cfg disables it.
    """
    if channel not in ("T", "R"):
        raise ValueError(f"channel must be 'T' or 'R', got {channel!r}")
    cfg = cfg or FDConfig()
    offs, coeff, pts = _stencil(spec.eps, cfg)
    phases = np.array([_phase(replace(spec, eps=e), channel) for e in pts])
    if cfg.unwrap:
        phases = np.unwrap(phases)
    d = sum(coeff[o] * p for o, p in zip(offs, phases)) / cfg.step
    # d(phase)/d(eps) -> tau0 units carries 1/u
    return float(d / spec.u)


def _phase_derivative_analytic(spec: BarrierSpec) -> float:
    """d(transmission phase)/d(eps), closed form.

    The phase is atan2 of h = (1/2)(xi - 1/xi) tanh(q) against 1; its
    derivative needs d(xi)/d(eps) and d(q)/d(eps), written logarithmically
    per regime.
    """
    u, mu, e = spec.u, spec.mu_ratio, spec.eps
    kin = kinematics(spec)
    q, xi = kin.q, kin.xi
    if spec.regime is Regime.RELATIVISTIC:
        k2 = mu * mu - e * e
        q2 = mu * mu - (1.0 - e) ** 2
        ep2 = 2.0 * mu * mu - (1.0 - e) ** 2
        dk_over_k = -e / k2
        dq_over_q = (1.0 - e) / q2
        dep_over_ep = (1.0 - e) / ep2
        dxi = xi * (dk_over_k + dep_over_ep - dq_over_q - 1.0 / e)
        dq = kin.q * dq_over_q
    elif spec.regime is Regime.NONRELATIVISTIC:
        dk_over_k = 0.5 / e
        dq_over_q = -0.5 / (1.0 - e)
        dxi = xi * (dk_over_k - dq_over_q)
        dq = kin.q * dq_over_q
    else:
        dk_over_k = 0.5 / e
        dq_over_q = -0.5 / (1.0 - e)
        dxi = xi * (dq_over_q - dk_over_k)
        dq = kin.q * dq_over_q
    th = math.tanh(q)
    h = 0.5 * (xi - 1.0 / xi) * th
    dh = 0.5 * (1.0 + 1.0 / (xi * xi)) * dxi * th + 0.5 * (xi - 1.0 / xi) * (
        1.0 - th * th
    ) * dq
    return dh / (1.0 + h * h)


def phase_time_analytic(spec: BarrierSpec, channel: str = "T") -> float:
    """Group delay from the symbolic phase derivative, in tau0 units.

    The reflection phase differs from the transmission phase by a constant
    -pi/2 (the reflected amplitude is -i times a positive multiple of the
    transmitted one), so both channels share the same delay.
    """
    if channel not in ("T", "R"):
        raise ValueError(f"channel must be 'T' or 'R', got {channel!r}")
    return _phase_derivative_analytic(spec) / spec.u


def group_time_composed(spec: BarrierSpec, cfg: FDConfig | None = None) -> float:
    """|T|^2-weighted composition of channel group delays via FD."""
    c = solve(spec)
    return c.mag2_t * phase_time_fd(spec, "T", cfg) + c.mag2_r * phase_time_fd(
        spec, "R", cfg
    )


def group_time_composed_analytic(spec: BarrierSpec) -> float:
    c = solve(spec)
    return c.mag2_t * phase_time_analytic(spec, "T") + c.mag2_r * phase_time_analytic(
        spec, "R"
    )


def dwell_integral(
    spec: BarrierSpec,
    coeffs: CoefficientSet | SpinCoefficientSet | None = None,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Dwell time from quadrature of the stored density inside the barrier.

    The density weight matches each regime's flux normalization:
    relativistic uses the upper-lower difference |phi1|^2 - |phi3|^2 over
    twice the velocity ratio; nonrelativistic reduces to the scalar
    |phi1|^2; superrelativistic weighs the spin-up difference by the
    channel's own normalization.  Returned in tau0 units.
    """
    cfg = cfg or QuadratureConfig()
    coeffs = coeffs if coeffs is not None else solve(spec)
    kin = kinematics(spec)
    xs, ws = _nodes(cfg)
    phis = np.array([wavefunction_at(spec, coeffs, x, Region.II) for x in xs])
    diff = np.abs(phis[:, 0]) ** 2 - np.abs(phis[:, 2]) ** 2
    if spec.regime is Regime.RELATIVISTIC:
        return float(np.dot(ws, diff) / (2.0 * kin.gamma))
    if spec.regime is Regime.NONRELATIVISTIC:
        dens = np.abs(phis[:, 0]) ** 2
        return float(spec.u * spec.mu_ratio * np.dot(ws, dens) / (2.0 * kin.k))
    ups4 = coeffs.upsilon_sq**2
    what = 0.5 * spec.mu_ratio * (1.0 - spec.eps)
    c = -spec.u * ups4 * what / (spec.mu_ratio * kin.q * kin.xi)
    return float(c * np.dot(ws, diff))


@dataclass(frozen=True)
class SensitivityReport:
    """Boundary bracket vs interior quadrature of the stored density."""

    boundary: float
    interior: float

    @property
    def residual(self) -> float:
        scale = max(abs(self.boundary), abs(self.interior))
        return abs(self.boundary - self.interior) / scale if scale else 0.0


def sensitivity_residual(
    spec: BarrierSpec,
    fd: FDConfig | None = None,
    quad: QuadratureConfig | None = None,
) -> SensitivityReport:
    """Energy-sensitivity identity check.

    Boundary side: the axis-matrix bracket of the wavefunction against its
    energy derivative, evaluated across the barrier faces (energy
    derivative by central differences on the full solution).  Interior
    side: quadrature of the parity-weighted density |phi1|^2 - |phi3|^2.
    For the model solutions the two sides agree only at the 10-percent
    level; the residual floor is a property of the approximation, not of
    the discretization (see the ledger note in the repository notes).
    """
    fd = fd or FDConfig()
    quad = quad or QuadratureConfig()
    offs, coeff, pts = _stencil(spec.eps, fd)

    def phi_pair(e: float):
        s = replace(spec, eps=e)
        c = solve(s)
        return (
            wavefunction_at(s, c, 0.0, Region.II),
            wavefunction_at(s, c, 1.0, Region.II),
        )

    d0 = np.zeros(4, dtype=complex)
    d1 = np.zeros(4, dtype=complex)
    for o, e in zip(offs, pts):
        p0, p1 = phi_pair(e)
        d0 += coeff[o] * p0
        d1 += coeff[o] * p1
    d0 /= fd.step
    d1 /= fd.step
    p0, p1 = phi_pair(spec.eps)

    def bracket(phi, dphi):
        # phi^dag alpha3 dphi with alpha3 swapping the 1<->3 components
        return phi[0].conjugate() * dphi[2] + phi[2].conjugate() * dphi[0]

    boundary = float((-1j * (bracket(p1, d1) - bracket(p0, d0))).real) / spec.u

    coeffs = solve(spec)
    xs, ws = _nodes(quad)
    phis = np.array([wavefunction_at(spec, coeffs, x, Region.II) for x in xs])
    interior = float(np.dot(ws, np.abs(phis[:, 0]) ** 2 - np.abs(phis[:, 2]) ** 2))
    return SensitivityReport(boundary=boundary, interior=interior)


def matching_solve(spec: BarrierSpec):
    """Re-derive the amplitudes from value continuity as a dense 4x4 solve.

    Unknowns are (reflected, interior decaying, interior growing,
    transmitted); continuity of the first and third spinor components at
    both barrier faces closes the system.  Raises SingularMatching if the
    system is numerically singular.
    """
    kin = kinematics(spec)
    g, gp, q, k = kin.gamma, kin.gamma_prime, kin.q, kin.k
    if spec.regime is Regime.SUPERRELATIVISTIC:
        ups = math.sqrt(1.0 + g * g)
        upsp = math.sqrt(1.0 + gp * gp)
        a, b = 1.0 / ups, 1.0 / upsp
        ep, em = math.exp(-q), math.exp(q)
        # unknowns: aprime, c, cprime, f
        m = np.array(
            [
                [a, -b, -b, 0.0],
                [-g * a, -1j * gp * b, 1j * gp * b, 0.0],
                [0.0, b * ep, b * em, -a],
                [0.0, 1j * gp * b * ep, -1j * gp * b * em, -g * a],
            ],
            dtype=complex,
        )
        rhs = np.array([-a, -g * a, 0.0, 0.0], dtype=complex)
        sol = _solve4(m, rhs)
        return SpinCoefficientSet(
            aprime=sol[0],
            bprime=0j,
            c=sol[1],
            cprime=sol[2],
            d=0j,
            dprime=0j,
            f=sol[3],
            g=0j,
            upsilon_sq=ups,
            upsilon_prime_sq=upsp,
        )
    eq, emq = math.exp(q), math.exp(-q)
    # unknowns: b, c, d, f
    m = np.array(
        [
            [1.0, -1.0, -1.0, 0.0],
            [g, -1j * gp, 1j * gp, 0.0],
            [0.0, eq, emq, -1.0],
            [0.0, 1j * gp * eq, -1j * gp * emq, g],
        ],
        dtype=complex,
    )
    rhs = np.array([-1.0, g, 0.0, 0.0], dtype=complex)
    sol = _solve4(m, rhs)
    return CoefficientSet(b=sol[0], c=sol[1], d=sol[2], f=sol[3])


def _solve4(m: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    try:
        sol = np.linalg.solve(m, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularMatching(str(exc)) from exc
    if not np.all(np.isfinite(sol)):
        raise SingularMatching("non-finite matching solution")
    return sol


def spin_down_matching(spec: BarrierSpec):
    """Rank data for the homogeneous spin-down continuity block.

    Returns (rank, smallest singular value); full rank means the only
    matching-consistent spin-flip amplitudes are identically zero.
    """
    kin = kinematics(spec)
    g, gp, q = kin.gamma, kin.gamma_prime, kin.q
    ups = math.sqrt(1.0 + g * g)
    upsp = math.sqrt(1.0 + gp * gp)
    a, b = 1.0 / ups, 1.0 / upsp
    ep, em = math.exp(-q), math.exp(q)
    # unknowns: bprime, d, dprime, g
    m = np.array(
        [
            [a, -b, -b, 0.0],
            [-g * a, 1j * gp * b, -1j * gp * b, 0.0],
            [0.0, b * ep, b * em, -a],
            [0.0, -1j * gp * b * ep, 1j * gp * b * em, g * a],
        ],
        dtype=complex,
    )
    sv = np.linalg.svd(m, compute_uv=False)
    rank = int(np.sum(sv > sv[0] * 1e-12))
    return rank, float(sv[-1])


def current_audit(
    spec: BarrierSpec,
    coeffs: CoefficientSet | SpinCoefficientSet | None = None,
    xs: dict[Region, list[float]] | None = None,
) -> dict[str, float]:
    """Probability-current constancy across regions.

    Returns the sampled currents keyed by "region:x" plus the maximum
    relative deviation under "max_rel_dev".
    """
    if coeffs is None:
        coeffs = (
            solve_superrel(spec, 0j)
            if spec.regime is Regime.SUPERRELATIVISTIC
            else solve(spec)
        )
    if xs is None:
        xs = {
            Region.I: [-1.7, -0.3],
            Region.II: [0.0, 0.25, 0.5, 0.75, 1.0],
            Region.III: [1.0, 1.2, 2.5],
        }
    out: dict[str, float] = {}
    vals = []
    for region, points in xs.items():
        for x in points:
            j = probability_current(spec, coeffs, x, region)
            out[f"{region.value}:{x}"] = j
            vals.append(j)
    ref = max(abs(v) for v in vals)
    out["max_rel_dev"] = (max(vals) - min(vals)) / ref if ref else 0.0
    return out
