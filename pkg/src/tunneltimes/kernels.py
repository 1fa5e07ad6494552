"""Grid kernels for the closed-form tunneling times.

Two interchangeable backends: numba @njit loops (default when numba
imports) and vectorized numpy.  Set TUNNELTIMES_NO_NUMBA=1 to force the
numpy path; bench/bench_sweep.py compares the two.  The test suite asserts
the backends agree to the last bit or so.

All outputs are times in units of the light-crossing time tau0 = a/c, on an
eps grid with fixed (u, mu_ratio).
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag instead
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and os.environ.get("TUNNELTIMES_NO_NUMBA", "") != "1"

# spin-down source modes for the spin-resolved kernels
BPRIME_ZERO = 0
BPRIME_BALANCED = 1
BPRIME_EXPLICIT = 2

# below this, sinh(2q)/(2q) switches to its series
_SINHC_CUT = 1e-4


# ---------------------------------------------------------------------------
# numpy backend

def _sinhc2_np(q):
    """sinh(2q)/(2q), series-stabilized near zero."""
    x = 2.0 * np.asarray(q, dtype=np.float64)
    x2 = x * x
    small = np.abs(x) < _SINHC_CUT
    safe = np.where(small, 1.0, x)
    return np.where(small, 1.0 + x2 / 6.0 + x2 * x2 / 120.0, np.sinh(safe) / safe)


def _t2_np(q, xi):
    """Transmission probability |F|^2 for impedance ratio xi."""
    s = 0.5 * (xi - 1.0 / xi) * np.sinh(q)
    c = np.cosh(q)
    return 1.0 / (c * c + s * s)


def _rel_kin_np(u, mu, eps):
    kk = np.sqrt(mu * mu - eps * eps)
    qq = np.sqrt(mu * mu - (1.0 - eps) ** 2)
    ep = np.sqrt(2.0 * mu * mu - (1.0 - eps) ** 2)
    xi = kk * ep / (qq * eps)
    return u * kk, u * qq, ep, xi


def rel_times_np(u, mu, eps):
    bigk, bigq, ep, xi = _rel_kin_np(u, mu, eps)
    t2 = _t2_np(bigq, xi)
    s = _sinhc2_np(bigq)
    brace = mu * mu * (1.0 + xi * xi) * s + (
        3.0 * mu * mu - 2.0 * (1.0 - eps) ** 2
    ) * (1.0 - xi * xi)
    td = u * t2 * brace / (4.0 * bigq * xi * ep)
    ti = u * mu * mu * t2 * (1.0 + xi * xi) * (s * 2.0 * bigq) / (
        4.0 * bigk * bigk * xi * eps
    )
    return td, ti, td + ti


def rel_times_wide_np(u, mu, eps):
    bigk, bigq, ep, xi = _rel_kin_np(u, mu, eps)
    opx = 1.0 + xi * xi
    td = u * mu * mu * xi / (bigq * bigq * ep * opx)
    ti = 2.0 * u * mu * mu * xi / (bigk * bigk * eps * opx)
    return td, ti, td + ti


def nonrel_times_np(u, mu, eps):
    bigk = u * np.sqrt(2.0 * mu * eps)
    bigq = u * np.sqrt(2.0 * mu * (1.0 - eps))
    xi = bigk / bigq
    t2 = _t2_np(bigq, xi)
    s = _sinhc2_np(bigq)
    td = u * mu * t2 * ((1.0 + xi * xi) * s + (1.0 - xi * xi)) / (4.0 * bigk)
    ti = u * mu * t2 * (1.0 + 1.0 / (xi * xi)) * s / (2.0 * bigk)
    return td, ti, td + ti


def nonrel_times_wide_np(u, mu, eps):
    bigk = u * np.sqrt(2.0 * mu * eps)
    bigq = u * np.sqrt(2.0 * mu * (1.0 - eps))
    xi = bigk / bigq
    opx = 1.0 + xi * xi
    td = u * mu * xi / (bigq * bigq * opx)
    ti = 2.0 * u * mu * xi / (bigk * bigk * opx)
    return td, ti, td + ti


def srel_times_np(u, mur, eps, bmode=BPRIME_ZERO, bmag=0.0):
    bigp = u * np.sqrt(2.0 * eps / mur)
    bigpp = u * np.sqrt(2.0 * (1.0 - eps) / mur)
    xi = np.sqrt((1.0 - eps) / eps)
    t2 = _t2_np(bigpp, xi)
    if bmode == BPRIME_BALANCED:
        t2d = t2
    elif bmode == BPRIME_EXPLICIT:
        ch, sh = np.cosh(bigpp), np.sinh(bigpp)
        t2d = bmag * bmag / (ch * ch + xi * xi * sh * sh)
    else:
        t2d = np.zeros_like(t2)
    s = _sinhc2_np(bigpp)
    w = -0.5 * mur * (1.0 - eps)
    brace = (1.0 - w) * (1.0 + xi * xi) * s - (1.0 + w) * (1.0 - xi * xi)
    pref = u / (2.0 * mur * bigpp * xi)
    tdu = pref * t2 * brace
    tdd = pref * t2d * brace
    ti = u * t2 * (1.0 + xi * xi) * (s * 2.0 * bigpp) / (4.0 * mur * bigp * bigp * xi)
    return tdu, tdd, ti, tdu + tdd + ti, tdu + ti


def srel_times_wide_np(u, mur, eps, bmode=BPRIME_ZERO, bmag=0.0):
    bigp = u * np.sqrt(2.0 * eps / mur)
    bigpp = u * np.sqrt(2.0 * (1.0 - eps) / mur)
    xi = np.sqrt((1.0 - eps) / eps)
    opx = 1.0 + xi * xi
    w = -0.5 * mur * (1.0 - eps)
    tdu = 2.0 * u * (1.0 - w) * xi / (mur * bigpp * bigpp * opx)
    tdd = np.copy(tdu)
    ti = 2.0 * u * xi / (mur * bigp * bigp * opx)
    return tdu, tdd, ti, tdu + tdd + ti, tdu + ti


# ---------------------------------------------------------------------------
# numba backend: identical math, explicit loops

if USE_NUMBA:

    @njit(cache=True)
    def _sinhc2_nb(q):
        x = 2.0 * q
        if abs(x) < _SINHC_CUT:
            x2 = x * x
            return 1.0 + x2 / 6.0 + x2 * x2 / 120.0
        return math.sinh(x) / x

    @njit(cache=True)
    def _t2_nb(q, xi):
        s = 0.5 * (xi - 1.0 / xi) * math.sinh(q)
        c = math.cosh(q)
        return 1.0 / (c * c + s * s)

    @njit(cache=True)
    def _rel_nb(u, mu, eps, wide, td, ti, tg):
        for i in range(eps.shape[0]):
            e = eps[i]
            kk = math.sqrt(mu * mu - e * e)
            qq = math.sqrt(mu * mu - (1.0 - e) ** 2)
            ep = math.sqrt(2.0 * mu * mu - (1.0 - e) ** 2)
            xi = kk * ep / (qq * e)
            bigk, bigq = u * kk, u * qq
            if wide:
                opx = 1.0 + xi * xi
                td[i] = u * mu * mu * xi / (bigq * bigq * ep * opx)
                ti[i] = 2.0 * u * mu * mu * xi / (bigk * bigk * e * opx)
            else:
                t2 = _t2_nb(bigq, xi)
                s = _sinhc2_nb(bigq)
                brace = mu * mu * (1.0 + xi * xi) * s + (
                    3.0 * mu * mu - 2.0 * (1.0 - e) ** 2
                ) * (1.0 - xi * xi)
                td[i] = u * t2 * brace / (4.0 * bigq * xi * ep)
                ti[i] = (
                    u
                    * mu
                    * mu
                    * t2
                    * (1.0 + xi * xi)
                    * (s * 2.0 * bigq)
                    / (4.0 * bigk * bigk * xi * e)
                )
            tg[i] = td[i] + ti[i]

    @njit(cache=True)
    def _nonrel_nb(u, mu, eps, wide, td, ti, tg):
        for i in range(eps.shape[0]):
            e = eps[i]
            bigk = u * math.sqrt(2.0 * mu * e)
            bigq = u * math.sqrt(2.0 * mu * (1.0 - e))
            xi = bigk / bigq
            if wide:
                opx = 1.0 + xi * xi
                td[i] = u * mu * xi / (bigq * bigq * opx)
                ti[i] = 2.0 * u * mu * xi / (bigk * bigk * opx)
            else:
                t2 = _t2_nb(bigq, xi)
                s = _sinhc2_nb(bigq)
                td[i] = (
                    u * mu * t2 * ((1.0 + xi * xi) * s + (1.0 - xi * xi)) / (4.0 * bigk)
                )
                ti[i] = u * mu * t2 * (1.0 + 1.0 / (xi * xi)) * s / (2.0 * bigk)
            tg[i] = td[i] + ti[i]

    @njit(cache=True)
    def _srel_nb(u, mur, eps, wide, bmode, bmag, tdu, tdd, ti, tg, tgu):
        for i in range(eps.shape[0]):
            e = eps[i]
            bigp = u * math.sqrt(2.0 * e / mur)
            bigpp = u * math.sqrt(2.0 * (1.0 - e) / mur)
            xi = math.sqrt((1.0 - e) / e)
            w = -0.5 * mur * (1.0 - e)
            if wide:
                opx = 1.0 + xi * xi
                tdu[i] = 2.0 * u * (1.0 - w) * xi / (mur * bigpp * bigpp * opx)
                tdd[i] = tdu[i]
                ti[i] = 2.0 * u * xi / (mur * bigp * bigp * opx)
            else:
                t2 = _t2_nb(bigpp, xi)
                if bmode == BPRIME_BALANCED:
                    t2d = t2
                elif bmode == BPRIME_EXPLICIT:
                    ch, sh = math.cosh(bigpp), math.sinh(bigpp)
                    t2d = bmag * bmag / (ch * ch + xi * xi * sh * sh)
                else:
                    t2d = 0.0
                s = _sinhc2_nb(bigpp)
                brace = (1.0 - w) * (1.0 + xi * xi) * s - (1.0 + w) * (1.0 - xi * xi)
                pref = u / (2.0 * mur * bigpp * xi)
                tdu[i] = pref * t2 * brace
                tdd[i] = pref * t2d * brace
                ti[i] = (
                    u
                    * t2
                    * (1.0 + xi * xi)
                    * (s * 2.0 * bigpp)
                    / (4.0 * mur * bigp * bigp * xi)
                )
            tg[i] = tdu[i] + tdd[i] + ti[i]
            tgu[i] = tdu[i] + ti[i]


# ---------------------------------------------------------------------------
# public dispatch


def _as_grid(eps):
    return np.ascontiguousarray(np.atleast_1d(eps), dtype=np.float64)


def rel_times_grid(u, mu, eps, wide=False):
    eps = _as_grid(eps)
    if USE_NUMBA:
        td, ti, tg = (np.empty_like(eps) for _ in range(3))
        _rel_nb(u, mu, eps, wide, td, ti, tg)
        return td, ti, tg
    return (rel_times_wide_np if wide else rel_times_np)(u, mu, eps)


def nonrel_times_grid(u, mu, eps, wide=False):
    eps = _as_grid(eps)
    if USE_NUMBA:
        td, ti, tg = (np.empty_like(eps) for _ in range(3))
        _nonrel_nb(u, mu, eps, wide, td, ti, tg)
        return td, ti, tg
    return (nonrel_times_wide_np if wide else nonrel_times_np)(u, mu, eps)


def srel_times_grid(u, mur, eps, wide=False, bmode=BPRIME_ZERO, bmag=0.0):
    eps = _as_grid(eps)
    if USE_NUMBA:
        out = tuple(np.empty_like(eps) for _ in range(5))
        _srel_nb(u, mur, eps, wide, bmode, bmag, *out)
        return out
    return (srel_times_wide_np if wide else srel_times_np)(u, mur, eps, bmode, bmag)
