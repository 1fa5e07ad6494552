"""Dirac matrix algebra in two 4x4 representations.

Everything here is exact integer/half-integer arithmetic promoted to
complex128.  The consistency checks return residual dictionaries so callers
can gate on a single max value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations

import numpy as np

MATRIX_ATOL = 1e-12

I2 = np.eye(2, dtype=complex)
O2 = np.zeros((2, 2), dtype=complex)
I4 = np.eye(4, dtype=complex)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# metric signature (+,-,-,-)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def block(a, b, c, d):
    return np.block([[a, b], [c, d]])


def gamma(mu: int) -> np.ndarray:
    """Standard-representation gamma matrix, mu in 0..3."""
    if mu == 0:
        return block(I2, O2, O2, -I2)
    if mu in (1, 2, 3):
        s = PAULI[mu - 1]
        return block(O2, s, -s, O2)
    raise ValueError(f"gamma index must be 0..3, got {mu}")


def gamma5() -> np.ndarray:
    """Chirality matrix as the product i g0 g1 g2 g3."""
    return 1j * gamma(0) @ gamma(1) @ gamma(2) @ gamma(3)


def levi_civita(i: int, j: int, k: int, l: int) -> int:
    idx = (i, j, k, l)
    if len(set(idx)) < 4:
        return 0
    sign = 1
    seq = list(idx)
    for a in range(4):
        for b in range(3 - a):
            if seq[b] > seq[b + 1]:
                seq[b], seq[b + 1] = seq[b + 1], seq[b]
                sign = -sign
    return sign


def gamma5_from_contraction() -> np.ndarray:
    """Chirality matrix built from the rank-4 antisymmetric contraction.

    (i/4!) eps_{mnrs} g^m g^n g^r g^s with indices raised by the metric.
    Agrees with gamma5() to machine precision; kept as an independent
    construction for the self-checks.
    """
    total = np.zeros((4, 4), dtype=complex)
    gs = [gamma(m) for m in range(4)]
    for m, n, r, s in permutations(range(4)):
        eps = levi_civita(m, n, r, s)
        # lower all four indices: one factor of the metric diagonal each
        w = eps * METRIC[m, m] * METRIC[n, n] * METRIC[r, r] * METRIC[s, s]
        if w:
            total += w * gs[m] @ gs[n] @ gs[r] @ gs[s]
    # eps with lowered indices flips sign (det g = -1): -i/4! overall
    return -1j / 24.0 * total


def alpha3() -> np.ndarray:
    """Velocity matrix along the barrier axis, g0 g3."""
    return gamma(0) @ gamma(3)


def eta() -> np.ndarray:
    """Nilpotent generator mixing the upper and lower bispinor blocks."""
    s3 = PAULI[2]
    return block(I2, s3, -s3, -I2) / np.sqrt(2.0)


def eta_dagger() -> np.ndarray:
    return eta().conj().T


class RepTag(Enum):
    STANDARD = "standard"
    ALTERNATIVE = "alternative"


@dataclass(frozen=True)
class Representation:
    """A concrete matrix realization used by the scattering solver.

    gamma3_signed holds both sign choices for the alternative form; the
    standard form stores the same matrix twice for a uniform interface.
    """

    tag: RepTag
    gamma0: np.ndarray
    gamma3_plus: np.ndarray
    gamma3_minus: np.ndarray
    i_gamma5: np.ndarray


def standard_representation() -> Representation:
    g3 = gamma(3)
    return Representation(RepTag.STANDARD, gamma(0), g3, -g3, 1j * gamma5())


def alternative_representation() -> Representation:
    """Representation generated by eta: beta from the Hermitian part,
    the axis matrix from eta^dag eta - 1, i*gamma5 from the anti-Hermitian
    part."""
    e, ed = eta(), eta_dagger()
    beta = (e + ed) / np.sqrt(2.0)
    g3 = ed @ e - I4
    i_g5 = (e - ed) / np.sqrt(2.0)
    return Representation(RepTag.ALTERNATIVE, beta, g3, -g3, i_g5)


def max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m)))


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def check_representation(rep: Representation) -> dict[str, float]:
    """Residuals of the defining relations; all should be < MATRIX_ATOL."""
    res: dict[str, float] = {}
    if rep.tag is RepTag.STANDARD:
        gs = [gamma(m) for m in range(4)]
        for m in range(4):
            for n in range(4):
                want = 2.0 * METRIC[m, n] * I4
                res[f"clifford_{m}{n}"] = max_abs(anticommutator(gs[m], gs[n]) - want)
        g5 = gamma5()
        res["gamma5_square"] = max_abs(g5 @ g5 - I4)
        for m in range(4):
            res[f"gamma5_anticommute_{m}"] = max_abs(anticommutator(g5, gs[m]))
        res["gamma5_contraction"] = max_abs(g5 - gamma5_from_contraction())
        res["i_gamma5_field"] = max_abs(rep.i_gamma5 - 1j * g5)
    else:
        e, ed = eta(), eta_dagger()
        res["eta_nilpotent"] = max_abs(e @ e)
        res["eta_dagger_nilpotent"] = max_abs(ed @ ed)
        res["eta_anticommutator"] = max_abs(anticommutator(e, ed) - 2.0 * I4)
        res["eta_traceless"] = abs(np.trace(e))
        res["eta_singular"] = abs(np.linalg.det(e))
        res["beta_involution"] = max_abs(rep.gamma0 @ rep.gamma0 - I4)
        res["beta_hermitian"] = max_abs(rep.gamma0 - rep.gamma0.conj().T)
        res["gamma3_involution"] = max_abs(rep.gamma3_plus @ rep.gamma3_plus - I4)
        res["beta_gamma3_anticommute"] = max_abs(
            anticommutator(rep.gamma0, rep.gamma3_plus)
        )
        res["i_gamma5_square"] = max_abs(rep.i_gamma5 @ rep.i_gamma5 + I4)
        res["i_gamma5_antihermitian"] = max_abs(rep.i_gamma5 + rep.i_gamma5.conj().T)
        res["beta_matches_standard"] = max_abs(rep.gamma0 - gamma(0))
        res["gamma3_matches_velocity"] = min(
            max_abs(rep.gamma3_plus - alpha3()), max_abs(rep.gamma3_minus - alpha3())
        )
        res["decomposition"] = max_abs(
            (rep.gamma0 + rep.i_gamma5) / np.sqrt(2.0) - e
        )
    return res


def algebra_selfcheck() -> dict[str, float]:
    """Run both representation checks; keys are prefixed by the tag."""
    out: dict[str, float] = {}
    for rep in (standard_representation(), alternative_representation()):
        for k, v in check_representation(rep).items():
            out[f"{rep.tag.value}.{k}"] = v
    return out
