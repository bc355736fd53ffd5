import math

import pytest

from splitsim.errors import ConfigurationError, DomainError
from splitsim.moisture import MoistureState, ideal_zone_latent_load, step_moisture


def test_equilibrium_unchanged():
    state = MoistureState(w_zone=0.010, m_air=24.0)
    new = step_moisture(state, m_dot_in=0.02, w_in=0.010, q_lat_injected=0.0, dt=60.0)
    assert new.w_zone == pytest.approx(0.010, rel=1e-15)
    assert new.m_air == 24.0


def test_relaxation_without_overshoot():
    state = MoistureState(w_zone=0.008, m_air=24.0)
    previous = state.w_zone
    for _ in range(200):
        state = step_moisture(state, m_dot_in=0.02, w_in=0.014, q_lat_injected=0.0, dt=60.0)
        assert previous < state.w_zone <= 0.014
        previous = state.w_zone


def test_hand_computed_single_step():
    # dw = q dt / (l_v m_air) = -1000*60 / (2.45e6*20)
    state = MoistureState(w_zone=0.010, m_air=20.0)
    new = step_moisture(state, m_dot_in=0.0, w_in=0.0, q_lat_injected=-1000.0,
                        l_v=2.45e6, dt=60.0)
    assert new.w_zone - 0.010 == pytest.approx(-1.2244897959183673e-3, abs=1e-12)


def test_clamped_at_zero():
    state = MoistureState(w_zone=1e-4, m_air=20.0)
    new = step_moisture(state, m_dot_in=0.0, w_in=0.0, q_lat_injected=-5000.0, dt=60.0)
    assert new.w_zone == 0.0


def test_mass_conservation_via_ventilation():
    state = MoistureState(w_zone=0.006, m_air=30.0)
    for w_in in (0.002, 0.006, 0.013):
        new = step_moisture(state, m_dot_in=0.04, w_in=w_in, q_lat_injected=0.0, dt=120.0)
        stored = state.m_air * (new.w_zone - state.w_zone)
        transported = 120.0 * 0.04 * (w_in - new.w_zone)
        assert stored == pytest.approx(transported, rel=1e-12, abs=1e-18)


def test_fixed_point_with_extraction():
    m_dot, q_lat, l_v, w_in = 0.03, -500.0, 2.45e6, 0.012
    expected = w_in + q_lat / (l_v * m_dot)
    state = MoistureState(w_zone=0.012, m_air=24.0)
    for _ in range(5000):
        state = step_moisture(state, m_dot, w_in, q_lat, l_v, dt=60.0)
    assert state.w_zone == pytest.approx(expected, abs=1e-9)


def test_ideal_latent_load_lands_on_set_point():
    state = MoistureState(w_zone=0.014, m_air=24.0)
    load = ideal_zone_latent_load(state, m_dot_in=0.02, w_in=0.015, w_set=0.009, dt=3600.0)
    assert load < 0.0
    new = step_moisture(state, 0.02, 0.015, load, dt=3600.0)
    assert new.w_zone == pytest.approx(0.009, abs=1e-12)


def test_ideal_latent_load_zero_at_set_point_equilibrium():
    state = MoistureState(w_zone=0.009, m_air=24.0)
    assert ideal_zone_latent_load(state, 0.0, 0.009, 0.009, dt=3600.0) == 0.0


def test_preconditions():
    state = MoistureState(w_zone=0.01, m_air=24.0)
    with pytest.raises(DomainError):
        step_moisture(state, m_dot_in=-0.01, w_in=0.01, q_lat_injected=0.0)
    with pytest.raises(DomainError):
        step_moisture(state, m_dot_in=0.0, w_in=0.01, q_lat_injected=0.0, dt=0.0)
    with pytest.raises(DomainError):
        MoistureState(w_zone=-1e-9, m_air=24.0)
    with pytest.raises(ConfigurationError):
        MoistureState(w_zone=0.01, m_air=0.0)


def test_moisture_floor_is_logged(caplog):
    state = MoistureState(w_zone=1e-5, m_air=20.0)
    with caplog.at_level("DEBUG", logger="splitsim.moisture"):
        step_moisture(state, 0.0, 0.0, -5000.0, dt=60.0)
    assert any("clamped" in rec.message for rec in caplog.records)
