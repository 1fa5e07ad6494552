import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tunneltimes import (
    BarrierSpec,
    Region,
    Regime,
    balanced_bprime,
    probability_current,
    solve,
    solve_relativistic,
    solve_superrel,
    wavefunction_at,
)

# mu > 1 keeps both relativistic roots positive over the whole eps range
admissible_rel = st.builds(
    BarrierSpec,
    u=st.floats(0.5, 10.0),
    mu_ratio=st.floats(1.01, 2.5),
    eps=st.floats(0.02, 0.98),
    regime=st.just(Regime.RELATIVISTIC),
)
admissible_any = st.one_of(
    admissible_rel,
    st.builds(
        BarrierSpec,
        u=st.floats(0.5, 10.0),
        mu_ratio=st.floats(0.2, 2.5),
        eps=st.floats(0.02, 0.98),
        regime=st.sampled_from([Regime.NONRELATIVISTIC, Regime.SUPERRELATIVISTIC]),
    ),
)


@settings(max_examples=200, deadline=None)
@given(admissible_any)
def test_unitarity_property(spec):
    c = solve(spec)
    assert abs(c.mag2_t + c.mag2_r - 1.0) < 1e-10


def test_unitarity_fig2_grid():
    for e in np.linspace(0.05, 0.95, 181):
        c = solve_relativistic(BarrierSpec(eps=float(e)))
        assert abs(c.mag2_t + c.mag2_r - 1.0) < 1e-12


def test_solver_regime_routing():
    with pytest.raises(ValueError):
        solve_relativistic(BarrierSpec(regime=Regime.SUPERRELATIVISTIC))
    with pytest.raises(ValueError):
        solve_superrel(BarrierSpec(regime=Regime.RELATIVISTIC))


@pytest.mark.parametrize("regime", [Regime.RELATIVISTIC, Regime.NONRELATIVISTIC])
def test_value_continuity_at_faces(regime):
    spec = BarrierSpec(eps=0.43, regime=regime)
    c = solve(spec)
    left_out = wavefunction_at(spec, c, 0.0, Region.I)
    left_in = wavefunction_at(spec, c, 0.0, Region.II)
    right_in = wavefunction_at(spec, c, 1.0, Region.II)
    right_out = wavefunction_at(spec, c, 1.0, Region.III)
    assert np.max(np.abs(left_out - left_in)) < 1e-10
    assert np.max(np.abs(right_in - right_out)) < 1e-10


def test_value_continuity_superrel_no_spin_flip():
    spec = BarrierSpec(eps=0.43, regime=Regime.SUPERRELATIVISTIC)
    c = solve_superrel(spec, 0j)
    for x, inner, outer in ((0.0, Region.II, Region.I), (1.0, Region.II, Region.III)):
        a = wavefunction_at(spec, c, x, inner)
        b = wavefunction_at(spec, c, x, outer)
        assert np.max(np.abs(a - b)) < 1e-10


def test_region_bounds_enforced():
    spec = BarrierSpec()
    c = solve(spec)
    with pytest.raises(ValueError):
        wavefunction_at(spec, c, 0.5, Region.I)
    with pytest.raises(ValueError):
        wavefunction_at(spec, c, -0.1, Region.II)
    with pytest.raises(ValueError):
        probability_current(spec, c, 0.2, Region.III)


@pytest.mark.parametrize("regime", list(Regime))
def test_current_constant_across_regions(regime):
    spec = BarrierSpec(eps=0.37, regime=regime)
    c = solve_superrel(spec, 0j) if regime is Regime.SUPERRELATIVISTIC else solve(spec)
    samples = [
        probability_current(spec, c, -1.7, Region.I),
        probability_current(spec, c, -0.3, Region.I),
        probability_current(spec, c, 0.2, Region.II),
        probability_current(spec, c, 0.8, Region.II),
        probability_current(spec, c, 1.2, Region.III),
    ]
    ref = samples[-1]
    assert ref != 0.0
    for j in samples:
        assert abs(j - ref) / abs(ref) < 1e-9


def test_current_region1_matches_region3_spec_points():
    spec = BarrierSpec(eps=0.37)
    c = solve(spec)
    j1 = probability_current(spec, c, -0.3, Region.I)
    j3 = probability_current(spec, c, 1.2, Region.III)
    assert abs(j1 - j3) <= 1e-9 * abs(j3)


def test_transmitted_current_scales_with_t2():
    spec = BarrierSpec(eps=0.37)
    c = solve(spec)
    j3a = probability_current(spec, c, 1.2, Region.III)
    j3b = probability_current(spec, c, 2.5, Region.III)
    assert j3a == pytest.approx(j3b, rel=1e-14)


def test_superrel_spin_up_unitarity_exact():
    c = solve_superrel(BarrierSpec(eps=0.3, regime=Regime.SUPERRELATIVISTIC))
    assert abs(c.total_probability - 1.0) < 1e-12


def test_balanced_bprime_equalizes_channels():
    spec = BarrierSpec(eps=0.3, regime=Regime.SUPERRELATIVISTIC)
    c = solve_superrel(spec, balanced_bprime(spec))
    assert abs(c.g) == pytest.approx(abs(c.f), rel=1e-14)


def test_spin_down_scales_linearly_with_bprime():
    spec = BarrierSpec(eps=0.3, regime=Regime.SUPERRELATIVISTIC)
    c1 = solve_superrel(spec, 0.5 + 0.1j)
    c2 = solve_superrel(spec, 1.0 + 0.2j)
    assert c2.g == pytest.approx(2.0 * c1.g, rel=1e-14)
    assert c2.d == pytest.approx(2.0 * c1.d, rel=1e-14)


def test_reflection_phase_locked_to_transmission():
    # reflected amplitude is -i times a positive multiple of the transmitted
    for regime in Regime:
        for e in (0.2, 0.5, 0.8):
            c = solve(BarrierSpec(eps=e, regime=regime))
            r = c.aprime if regime is Regime.SUPERRELATIVISTIC else c.b
            ratio = r / c.f
            assert ratio.real == pytest.approx(0.0, abs=1e-14)
            assert ratio.imag < 0.0


def test_overflow_guard_triggers():
    from tunneltimes import OverflowGuard

    with pytest.raises(OverflowGuard):
        solve(BarrierSpec(u=700.0, eps=0.5))


def test_deep_tunneling_transmission_decays():
    t2 = [solve(BarrierSpec(u=u, eps=0.5)).mag2_t for u in (math.pi, 2 * math.pi, 4 * math.pi)]
    assert t2[0] > t2[1] > t2[2] > 0.0
