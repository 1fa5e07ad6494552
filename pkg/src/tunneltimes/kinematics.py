"""Barrier specification and derived dimensionless kinematics.

Internal unit system: hbar = c = 1 and the barrier height V0 = 1.  The only
length scale is the barrier width a, folded into the opacity u = V0*a/(hbar*c).
All wavenumbers are stored multiplied by a (so they are pure numbers) and all
times are reported in units of the light-crossing time tau0 = a/c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NonPositiveRootArgument

TWO_PI = 2.0 * math.pi

# Largest evanescent exponent q*a accepted by the finite-width expressions.
OVERFLOW_QA = 350.0


class Regime(Enum):
    """Energy-scale hierarchy selecting which closed forms apply.

    RELATIVISTIC      mc^2 comparable to V0, full dispersion.
    NONRELATIVISTIC   mc^2 >> E_k, quadratic dispersion inside and outside.
    SUPERRELATIVISTIC V0 >> mc^2, spin-resolved channels.
    """

    RELATIVISTIC = "rel"
    NONRELATIVISTIC = "nonrel"
    SUPERRELATIVISTIC = "superrel"


@dataclass(frozen=True)
class BarrierSpec:
    """Rectangular-barrier scattering problem in dimensionless form.

    u         barrier opacity V0*a/(hbar*c)
    mu_ratio  mc^2/V0 for RELATIVISTIC and NONRELATIVISTIC,
              V0/mc^2 for SUPERRELATIVISTIC
    eps       energy fraction in (0, 1): E/V0 in the first two regimes,
              E_k/V0 in the superrelativistic one
    """

    u: float = TWO_PI
    mu_ratio: float = 0.98
    eps: float = 0.5
    regime: Regime = Regime.RELATIVISTIC

    def __post_init__(self):
        if not (self.u > 0.0):
            raise ValueError(f"u must be positive, got {self.u}")
        if not (self.mu_ratio > 0.0):
            raise ValueError(f"mu_ratio must be positive, got {self.mu_ratio}")
        if not (0.0 < self.eps < 1.0):
            raise ValueError(f"eps must lie in (0, 1), got {self.eps}")
        if not isinstance(self.regime, Regime):
            raise ValueError(f"regime must be a Regime, got {self.regime!r}")


@dataclass(frozen=True)
class Kinematics:
    """Derived dimensionless quantities for one BarrierSpec.

    k            propagating wavenumber times a (regions outside the barrier)
    q            evanescent wavenumber times a (inside the barrier)
    gamma        velocity ratio of the outside wave
    gamma_prime  velocity ratio of the inside wave
    xi           impedance ratio gamma/gamma_prime entering the matching
    eprime       inside energy scale in units of V0
    """

    k: float
    q: float
    gamma: float
    gamma_prime: float
    xi: float
    eprime: float


def kinematics(spec: BarrierSpec) -> Kinematics:
    u, mu, eps = spec.u, spec.mu_ratio, spec.eps
    if spec.regime is Regime.RELATIVISTIC:
        k2 = mu * mu - eps * eps
        if k2 <= 0.0:
            raise NonPositiveRootArgument("mu^2 - eps^2", k2)
        q2 = mu * mu - (1.0 - eps) ** 2
        if q2 <= 0.0:
            raise NonPositiveRootArgument("mu^2 - (1 - eps)^2", q2)
        ep2 = 2.0 * mu * mu - (1.0 - eps) ** 2
        kk, qq, ep = math.sqrt(k2), math.sqrt(q2), math.sqrt(ep2)
        gamma = kk / eps
        gamma_prime = qq / ep
        return Kinematics(u * kk, u * qq, gamma, gamma_prime, gamma / gamma_prime, ep)
    if spec.regime is Regime.NONRELATIVISTIC:
        kk = math.sqrt(2.0 * mu * eps)
        qq = math.sqrt(2.0 * mu * (1.0 - eps))
        # velocity ratios relative to mc^2; only their ratio enters matching
        gamma = kk / mu
        gamma_prime = qq / mu
        return Kinematics(u * kk, u * qq, gamma, gamma_prime, kk / qq, mu)
    # superrelativistic: mu_ratio = V0/mc^2, eps = E_k/V0
    kk = math.sqrt(2.0 * eps / mu)
    qq = math.sqrt(2.0 * (1.0 - eps) / mu)
    gamma = kk / eps
    gamma_prime = qq / (1.0 - eps)
    return Kinematics(u * kk, u * qq, gamma, gamma_prime, gamma / gamma_prime, 1.0 - eps)
