"""The three split-system heat-pump models and their on/off controller.

Model 0: ideal loads. Whatever sensible/latent power holds the set points
is delivered instantly; electric power is that load over a constant COP.
Meant for hourly stepping; knows nothing about the real unit.

Model 1: constant capacities. Nominal total capacity split by a fixed
sensible heat factor, switched by the dead-band controller, rising after
each compressor start as a first-order lag (time constant tau). Electric
power is constant whenever the unit runs.

Model 2: rating-data coil model. Capacities come from the fitted
performance map at the current entering enthalpy and outdoor temperature,
with the bypass-factor correction moving the sensible/latent split off the
rating dry bulb. Same controller and start-up lag as model 1; electric
power is the fitted line in outdoor temperature, constant over a cycle.

Cooling convention: delivered capacities are negative (heat removed from
the zone), electric power positive. All models are cooling-only; heating
demands clamp to zero output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coil import CoilRegression, bypass_corrected_sensible, capacities_at_reference, split_capacities
from .errors import ConfigurationError, DomainError
from .psychro import MoistAirState

IDEAL_LOADS = 0
CONSTANT_CAPACITY = 1
RATING_DATA = 2


@dataclass(frozen=True)
class HvacConfig:
    """Unit parameters for all three models; unused fields are ignored."""

    model: int = CONSTANT_CAPACITY
    q_nominal_total_kw: float = 3.3
    shf: float = 0.7636  # sensible share of total capacity (model 1)
    cop: float = 2.64  # nominal cooling COP (models 0 and 1)
    tau_s: float = 120.0  # start-up time constant
    dead_half_band_k: float = 0.5  # controller half dead band
    t_set_c: float = 23.0
    w_set: float | None = None  # humidity set point, kg/kg (model 0 only)
    airflow_m3_s: float = 0.136  # indoor-unit air flow across the coil
    bypass_factor: float = 0.04
    regression: CoilRegression | None = None  # required for model 2

    def __post_init__(self):
        if self.model not in (IDEAL_LOADS, CONSTANT_CAPACITY, RATING_DATA):
            raise ConfigurationError(f"model must be 0, 1 or 2, got {self.model}")
        if not 0.0 < self.shf <= 1.0:
            raise ConfigurationError(f"shf must be in (0, 1], got {self.shf}")
        if self.cop <= 0.0:
            raise ConfigurationError(f"cop must be positive, got {self.cop}")
        if self.tau_s <= 0.0:
            raise ConfigurationError(f"tau_s must be positive, got {self.tau_s}")
        if self.dead_half_band_k <= 0.0:
            raise ConfigurationError(f"dead_half_band_k must be positive, got {self.dead_half_band_k}")
        if self.q_nominal_total_kw <= 0.0:
            raise ConfigurationError(f"q_nominal_total_kw must be positive, got {self.q_nominal_total_kw}")
        if self.airflow_m3_s <= 0.0:
            raise ConfigurationError(f"airflow_m3_s must be positive, got {self.airflow_m3_s}")
        if not 0.0 <= self.bypass_factor < 1.0:
            raise ConfigurationError(f"bypass_factor must be in [0, 1), got {self.bypass_factor}")


@dataclass(frozen=True)
class HvacState:
    """Controller state: running or not, and for how long."""

    is_on: bool = False
    t_since_start: float = 0.0  # s, counts only while on

    def __post_init__(self):
        if self.t_since_start < 0.0:
            raise DomainError(f"t_since_start must be non-negative, got {self.t_since_start}")
        if not self.is_on and self.t_since_start != 0.0:
            raise DomainError("t_since_start only counts while the unit is on")


@dataclass(frozen=True)
class HvacOutput:
    """Capacities injected into the zone balances plus electric power, W."""

    q_sens: float = 0.0  # <= 0 in cooling
    q_lat: float = 0.0  # <= 0
    power: float = 0.0  # >= 0
    clamped: bool = False  # performance-map query clamped onto the fitted grid
    dry_coil: bool = False  # latent share clamped at zero

    def __post_init__(self):
        if self.q_sens > 0.0 or self.q_lat > 0.0:
            raise DomainError("cooling capacities must be non-positive")
        if self.power < 0.0:
            raise DomainError(f"power must be non-negative, got {self.power}")

    @property
    def q_tot(self) -> float:
        return self.q_sens + self.q_lat


OFF = HvacState(is_on=False, t_since_start=0.0)
_ZERO_OUTPUT = HvacOutput()


def controller_step(t_ai: float, cfg: HvacConfig, prev: HvacState, dt: float) -> HvacState:
    """On/off controller with a dead zone around the set point.

    Switches on at or above t_set + half band, off at or below t_set - half
    band, holds the previous state in between. The running timer restarts on
    every off-to-on transition and advances by dt while on.
    """
    if dt <= 0.0:
        raise DomainError(f"dt must be positive, got {dt}")
    if prev.is_on:
        if t_ai <= cfg.t_set_c - cfg.dead_half_band_k:
            return OFF
        return HvacState(is_on=True, t_since_start=prev.t_since_start + dt)
    if t_ai >= cfg.t_set_c + cfg.dead_half_band_k:
        return HvacState(is_on=True, t_since_start=0.0)
    return OFF


def startup_factor(t_since_start: float, tau: float) -> float:
    """Fraction of steady-state capacity reached t seconds after start-up.

    First-order rise 1 - exp(-t/tau): zero at the start instant, strictly
    increasing, approaching one.
    """
    if t_since_start < 0.0:
        raise DomainError(f"t_since_start must be non-negative, got {t_since_start}")
    if tau <= 0.0:
        raise DomainError(f"tau must be positive, got {tau}")
    return 1.0 - math.exp(-t_since_start / tau)


def model0_step(sens_load: float, lat_load: float, cfg: HvacConfig) -> HvacOutput:
    """Ideal-loads model: deliver the loads, bill them at constant COP.

    Loads are the powers that hold the set points (W, negative in cooling);
    positive (heating) demands clamp to zero output on this cooling-only unit.
    """
    q_sens = min(sens_load, 0.0)
    q_lat = min(lat_load, 0.0)
    return HvacOutput(q_sens=q_sens, q_lat=q_lat, power=-(q_sens + q_lat) / cfg.cop)


def model1_step(state: HvacState, cfg: HvacConfig) -> HvacOutput:
    """Constant-capacity model evaluated at the current point of the start-up ramp.

    ``state`` must already be advanced by ``controller_step`` for this step.
    """
    if not state.is_on:
        return _ZERO_OUTPUT
    q_tot = -cfg.q_nominal_total_kw * 1000.0 * startup_factor(state.t_since_start, cfg.tau_s)
    return HvacOutput(
        q_sens=cfg.shf * q_tot,
        q_lat=(1.0 - cfg.shf) * q_tot,
        power=cfg.q_nominal_total_kw * 1000.0 / cfg.cop,
    )


def model2_step(state: HvacState, zone_air: MoistAirState, t_ext: float, cfg: HvacConfig) -> HvacOutput:
    """Rating-data model: performance map + bypass correction + start-up ramp.

    ``state`` must already be advanced by ``controller_step``. The zone air
    state is the coil-entering state (well-mixed zone); outdoor temperature
    drives both the capacity surfaces and the power line.
    """
    if cfg.regression is None:
        raise ConfigurationError("model 2 requires a fitted coil regression")
    if not state.is_on:
        return _ZERO_OUTPUT
    reg = cfg.regression

    ref = capacities_at_reference(reg, zone_air.enthalpy, t_ext)
    q_sens_corr = bypass_corrected_sensible(
        ref.q_sens, zone_air.t_db, zone_air.volume,
        cfg.airflow_m3_s, cfg.bypass_factor, t_db_ref=reg.t_db_ref,
    )
    parts = split_capacities(ref.q_tot, q_sens_corr)

    factor = startup_factor(state.t_since_start, cfg.tau_s)
    t_power = min(max(t_ext, reg.t_ext_range[0]), reg.t_ext_range[1])
    return HvacOutput(
        q_sens=-1000.0 * factor * parts.q_sens,
        q_lat=-1000.0 * factor * parts.q_lat,
        power=1000.0 * reg.power_kw(t_power),
        clamped=ref.clamped,
        dry_coil=parts.dry_coil,
    )
