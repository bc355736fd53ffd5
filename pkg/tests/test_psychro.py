"""Property values frozen from an independent spreadsheet-style evaluation
of the ASHRAE correlations (saturation pressure, psychrometer relation,
ideal-gas volume), not from the module under test."""

import math

import pytest
from hypothesis import given, strategies as st

from splitsim.errors import DomainError
from splitsim.psychro import (
    MoistAirState,
    humidity_ratio_from_rh,
    humidity_ratio_from_wetbulb,
    moist_air_enthalpy,
    relative_humidity,
    saturation_humidity_ratio,
    saturation_vapor_pressure,
    specific_volume,
)


class TestSaturationPressure:
    def test_zero_celsius_anchor(self):
        assert saturation_vapor_pressure(0.0) == pytest.approx(0.6112, abs=2e-4)

    def test_frozen_values(self):
        assert saturation_vapor_pressure(20.0) == pytest.approx(2.338804, rel=1e-6)
        assert saturation_vapor_pressure(27.0) == pytest.approx(3.567312, rel=1e-6)
        assert saturation_vapor_pressure(19.0) == pytest.approx(2.197796, rel=1e-6)

    def test_strictly_increasing(self):
        grid = [-40 + 2 * i for i in range(51)]
        values = [saturation_vapor_pressure(t) for t in grid]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(v > 0.0 for v in values)

    @pytest.mark.parametrize("t", [-40.1, 60.1, 100.0])
    def test_out_of_range(self, t):
        with pytest.raises(DomainError):
            saturation_vapor_pressure(t)

    def test_pure(self):
        assert saturation_vapor_pressure(23.7) == saturation_vapor_pressure(23.7)


class TestHumidityRatioFromRh:
    def test_zero_rh(self):
        assert humidity_ratio_from_rh(27.0, 0.0) == 0.0

    def test_frozen_values(self):
        assert humidity_ratio_from_rh(27.0, 0.5) == pytest.approx(0.01114510, abs=1e-8)
        assert humidity_ratio_from_rh(27.0, 1.0) == pytest.approx(0.02269690, abs=1e-8)

    def test_saturated_equals_w_sat(self):
        assert humidity_ratio_from_rh(27.0, 1.0) == saturation_humidity_ratio(27.0)

    @pytest.mark.parametrize("rh", [-0.01, 1.01])
    def test_rh_range(self, rh):
        with pytest.raises(DomainError):
            humidity_ratio_from_rh(27.0, rh)

    def test_vapor_pressure_above_total(self):
        # ps(60 C) = 19.9 kPa exceeds a 15 kPa total pressure
        with pytest.raises(DomainError):
            humidity_ratio_from_rh(60.0, 1.0, p_atm_kpa=15.0)

    @given(t=st.floats(-10.0, 50.0), rh=st.floats(0.01, 1.0))
    def test_rh_round_trip(self, t, rh):
        w = humidity_ratio_from_rh(t, rh)
        assert relative_humidity(t, w) == pytest.approx(rh, rel=1e-9)


class TestHumidityRatioFromWetbulb:
    def test_saturated_case(self):
        assert humidity_ratio_from_wetbulb(27.0, 27.0) == pytest.approx(
            saturation_humidity_ratio(27.0), rel=1e-12)

    def test_frozen_values(self):
        assert humidity_ratio_from_wetbulb(27.0, 19.0) == pytest.approx(0.01045112, abs=1e-8)
        assert humidity_ratio_from_wetbulb(27.0, 16.0) == pytest.approx(0.00681833, abs=1e-8)

    def test_monotone_in_wetbulb(self):
        wetbulbs = [14 + 0.5 * i for i in range(27)]  # up to 27
        values = [humidity_ratio_from_wetbulb(27.0, wb) for wb in wetbulbs]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_wetbulb_above_drybulb(self):
        with pytest.raises(DomainError):
            humidity_ratio_from_wetbulb(27.0, 27.5)


class TestEnthalpy:
    def test_datum(self):
        assert moist_air_enthalpy(0.0, 0.0) == 0.0

    def test_dry_air(self):
        assert moist_air_enthalpy(27.0, 0.0) == pytest.approx(27.162, abs=1e-9)

    def test_rated_midgrid_state(self):
        # 0.0122 kg/kg at 27 C lands within 2 kJ/kg of the rating sheet's
        # 58 kJ/kg enthalpy label for that column
        assert moist_air_enthalpy(27.0, 0.0122) == pytest.approx(58.286884, abs=1e-6)
        assert abs(moist_air_enthalpy(27.0, 0.0122) - 58.0) < 2.0

    def test_increasing_in_both_arguments(self):
        base = moist_air_enthalpy(27.0, 0.010)
        assert moist_air_enthalpy(27.1, 0.010) > base
        assert moist_air_enthalpy(27.0, 0.0101) > base

    def test_negative_w(self):
        with pytest.raises(DomainError):
            moist_air_enthalpy(27.0, -1e-9)


class TestSpecificVolume:
    def test_frozen_values(self):
        assert specific_volume(27.0, 0.0) == pytest.approx(0.850329, abs=1e-6)
        assert specific_volume(27.0, 0.0122) == pytest.approx(0.867008, abs=1e-6)
        assert specific_volume(0.0, 0.0) == pytest.approx(0.773837, abs=1e-6)

    def test_increasing(self):
        assert specific_volume(28.0, 0.01) > specific_volume(27.0, 0.01)
        assert specific_volume(27.0, 0.011) > specific_volume(27.0, 0.01)
        assert specific_volume(27.0, 0.01) > 0.0


class TestMoistAirState:
    def test_valid_state_properties(self):
        state = MoistAirState(t_db=27.0, w=0.0122)
        assert state.enthalpy == moist_air_enthalpy(27.0, 0.0122)
        assert state.volume == specific_volume(27.0, 0.0122)
        assert 0.0 < state.rh < 1.0

    def test_supersaturation_rejected(self):
        w_max = saturation_humidity_ratio(27.0)
        MoistAirState(t_db=27.0, w=w_max)  # at saturation: fine
        with pytest.raises(DomainError):
            MoistAirState(t_db=27.0, w=w_max + 1e-5)

    def test_negative_w_rejected(self):
        with pytest.raises(DomainError):
            MoistAirState(t_db=27.0, w=-1e-9)

    def test_bad_pressure_rejected(self):
        with pytest.raises(DomainError):
            MoistAirState(t_db=27.0, w=0.01, p_atm_kpa=0.0)
