"""Coupled zone / heat-pump simulation loop, hourly aggregation, run comparison.

Per time step the loop (models 1 and 2):

1. samples the weather at the new time level (the envelope step is implicit),
2. advances the on/off controller on the previous step's zone air temperature
   (explicit sensing: one-step delay, well under the start-up time constant),
3. evaluates the heat-pump model,
4. injects the sensible capacity into the thermal network step and the latent
   capacity into the moisture balance step,
5. records the end-of-step state (records are stamped with the step start).

Model 0 runs on an hourly step with ideal loads holding both set points
(cooling/dehumidification only) and no controller.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from datetime import datetime, timedelta

from . import hvac as hv
from .envelope import EnvelopeState, ZoneConfig, ideal_zone_sensible_load, step_thermal
from .errors import ConfigurationError, DomainError, SplitsimError
from .moisture import MoistureState, ideal_zone_latent_load, step_moisture
from .psychro import LATENT_HEAT_J_PER_KG, MoistAirState, saturation_humidity_ratio, specific_volume
from .weather import WeatherSeries, interpolate_weather

logger = logging.getLogger(__name__)

HOUR_S = 3600.0

# StepRecord.warnings bits
W_COIL_CLAMPED = 1  # performance-map query clamped onto the fitted grid
W_DRY_COIL = 2  # latent capacity clamped at zero
W_MOISTURE_FLOOR = 4  # zone humidity floored at zero


@dataclass(frozen=True)
class SimConfig:
    """Run window and stepping; start/end default to the weather span."""

    dt_s: float = 60.0
    start: datetime | None = None
    end: datetime | None = None
    initial_temp_c: float | None = None  # None: first weather sample's outdoor temperature
    initial_w: float | None = None  # None: outdoor humidity ratio at start

    def __post_init__(self):
        if self.dt_s <= 0.0:
            raise ConfigurationError(f"dt_s must be positive, got {self.dt_s}")
        if HOUR_S % self.dt_s != 0.0:
            raise ConfigurationError(f"dt_s must divide 3600 s, got {self.dt_s}")
        if self.start is not None and self.end is not None and self.start >= self.end:
            raise ConfigurationError("start must precede end")

    def resolved(self, weather: WeatherSeries) -> "SimConfig":
        """Fill missing start/end from the weather span."""
        if self.start is not None and self.end is not None:
            return self
        return SimConfig(dt_s=self.dt_s,
                         start=self.start or weather.start,
                         end=self.end or weather.end,
                         initial_temp_c=self.initial_temp_c,
                         initial_w=self.initial_w)


@dataclass(frozen=True)
class StepRecord:
    """One output row; temperatures/humidity are end-of-step values."""

    timestamp: datetime
    t_ai: float
    t_rm: float
    w_zone: float
    t_ae: float
    is_on: bool
    q_sens: float  # W, <= 0 cooling
    q_lat: float  # W
    q_tot: float  # W, always q_sens + q_lat
    power: float  # W electric
    warnings: int = 0


def _entering_state(t_db: float, w: float) -> MoistAirState:
    # zone air briefly dips below its dew point when sensible pull-down
    # outruns dehumidification; the coil query caps at saturation
    return MoistAirState(t_db=t_db, w=min(w, saturation_humidity_ratio(t_db)))


def run_simulation(zone: ZoneConfig, hvac_cfg: hv.HvacConfig, weather: WeatherSeries,
                   sim: SimConfig) -> list[StepRecord]:
    """Run the coupled loop; returns one record per step.

    Model 0 always runs at a 3600 s step regardless of ``sim.dt_s``.
    Any module error aborts the run tagged with the offending timestamp.
    """
    sim = sim.resolved(weather)
    dt = HOUR_S if hvac_cfg.model == hv.IDEAL_LOADS else sim.dt_s
    if hvac_cfg.model == hv.IDEAL_LOADS and sim.dt_s != HOUR_S:
        logger.info("model 0 runs on an hourly step; ignoring dt_s=%s", sim.dt_s)
    if hvac_cfg.model == hv.IDEAL_LOADS and hvac_cfg.w_set is None:
        raise ConfigurationError("model 0 needs a humidity set point (w_set)")

    span = (sim.end - sim.start).total_seconds()
    n_steps = round(span / dt)
    if n_steps <= 0 or abs(n_steps * dt - span) > 1e-9:
        raise ConfigurationError(f"run span {span:.0f} s is not a positive multiple of dt={dt:.0f} s")

    bc0, w_out0 = interpolate_weather(weather, sim.start)
    t0 = sim.initial_temp_c if sim.initial_temp_c is not None else bc0.t_ae
    w0 = sim.initial_w if sim.initial_w is not None else w_out0
    env = EnvelopeState.uniform(zone, t0)
    moist = MoistureState(w_zone=w0, m_air=zone.volume / specific_volume(t0, w0))
    state = hv.OFF

    records: list[StepRecord] = []
    for k in range(n_steps):
        t_step = sim.start + timedelta(seconds=k * dt)
        try:
            bc, w_out = interpolate_weather(weather, t_step + timedelta(seconds=dt))

            if hvac_cfg.model == hv.IDEAL_LOADS:
                sens_load = ideal_zone_sensible_load(zone, env, bc, hvac_cfg.t_set_c, dt)
                lat_load = ideal_zone_latent_load(moist, zone.air_renewal_flow, w_out,
                                                  hvac_cfg.w_set, LATENT_HEAT_J_PER_KG, dt)
                out = hv.model0_step(sens_load, lat_load, hvac_cfg)
                is_on = out.q_tot < 0.0
            else:
                state = hv.controller_step(env.t_ai, hvac_cfg, state, dt)
                if hvac_cfg.model == hv.CONSTANT_CAPACITY:
                    out = hv.model1_step(state, hvac_cfg)
                else:
                    out = hv.model2_step(state, _entering_state(env.t_ai, moist.w_zone),
                                         bc.t_ae, hvac_cfg)
                is_on = state.is_on

            env = step_thermal(zone, env, bc, out.q_sens, dt)
            new_moist = step_moisture(moist, zone.air_renewal_flow, w_out, out.q_lat,
                                      LATENT_HEAT_J_PER_KG, dt)
        except SplitsimError as exc:
            raise SplitsimError(f"at {t_step.isoformat()}: {exc}") from exc

        warnings = (W_COIL_CLAMPED if out.clamped else 0) \
            | (W_DRY_COIL if out.dry_coil else 0) \
            | (W_MOISTURE_FLOOR if (out.q_lat < 0.0 and new_moist.w_zone == 0.0) else 0)
        moist = new_moist
        records.append(StepRecord(
            timestamp=t_step, t_ai=env.t_ai, t_rm=env.t_rm, w_zone=moist.w_zone,
            t_ae=bc.t_ae, is_on=is_on, q_sens=out.q_sens, q_lat=out.q_lat,
            q_tot=out.q_tot, power=out.power, warnings=warnings,
        ))

    floored = sum(1 for r in records if r.warnings & W_MOISTURE_FLOOR)
    if floored:
        logger.warning("zone humidity floored at zero on %d of %d steps "
                       "(latent extraction exceeded the zone moisture)", floored, len(records))
    return records


@dataclass(frozen=True)
class HourlyRecord:
    """Arithmetic means over one whole hour of step records."""

    hour_start: datetime
    t_ai: float
    t_rm: float
    w_zone: float
    t_ae: float
    duty_cycle: float  # fraction of on-steps
    q_sens: float
    q_lat: float
    q_tot: float
    power: float  # mean W
    energy_wh: float  # mean power x 1 h
    cycle_count: int  # off-to-on transitions inside the hour
    warnings: int


def aggregate_hourly(records: list[StepRecord]) -> list[HourlyRecord]:
    """Average fixed-dt sub-hourly records into whole hours.

    A partial trailing hour is dropped with a warning. Capacities and power
    average arithmetically, so hourly q_tot stays q_sens + q_lat.
    """
    if not records:
        return []
    if len(records) < 2:
        dt = HOUR_S
    else:
        dt = (records[1].timestamp - records[0].timestamp).total_seconds()
    if dt <= 0.0 or HOUR_S % dt != 0.0:
        raise DomainError(f"record spacing {dt} s must divide one hour")
    for i in range(1, len(records)):
        gap = (records[i].timestamp - records[i - 1].timestamp).total_seconds()
        if gap != dt:
            raise DomainError(f"record spacing changes at {records[i].timestamp.isoformat()}")

    per_hour = int(HOUR_S / dt)
    n_whole = len(records) // per_hour
    if n_whole * per_hour != len(records):
        logger.warning("dropping %d trailing records (partial hour)", len(records) - n_whole * per_hour)

    hourly = []
    prev_on = False  # unit starts off; first on-step counts as a cycle
    for h in range(n_whole):
        chunk = records[h * per_hour:(h + 1) * per_hour]
        cycles = 0
        warnings = 0
        for rec in chunk:
            if rec.is_on and not prev_on:
                cycles += 1
            prev_on = rec.is_on
            warnings |= rec.warnings
        mean = lambda f: math.fsum(f(r) for r in chunk) / per_hour
        power = mean(lambda r: r.power)
        hourly.append(HourlyRecord(
            hour_start=chunk[0].timestamp,
            t_ai=mean(lambda r: r.t_ai), t_rm=mean(lambda r: r.t_rm),
            w_zone=mean(lambda r: r.w_zone), t_ae=mean(lambda r: r.t_ae),
            duty_cycle=mean(lambda r: 1.0 if r.is_on else 0.0),
            q_sens=mean(lambda r: r.q_sens), q_lat=mean(lambda r: r.q_lat),
            q_tot=mean(lambda r: r.q_tot), power=power, energy_wh=power,
            cycle_count=cycles, warnings=warnings,
        ))
    return hourly


@dataclass(frozen=True)
class RunSummary:
    name: str
    hours: int
    electric_kwh: float
    cooling_kwh: float  # magnitude of total capacity delivered
    cycles: int
    mean_t_ai: float


@dataclass(frozen=True)
class PairStats:
    name_a: str
    name_b: str
    rmse_t_ai: float
    bias_t_ai: float  # mean(a - b)
    delta_electric_kwh: float  # a - b


@dataclass(frozen=True)
class ComparisonReport:
    runs: tuple[RunSummary, ...]
    pairs: tuple[PairStats, ...]

    def format_table(self) -> str:
        lines = [f"{'run':<12}{'hours':>6}{'electric kWh':>14}{'cooling kWh':>13}{'cycles':>8}{'mean t_ai':>11}"]
        for r in self.runs:
            lines.append(f"{r.name:<12}{r.hours:>6}{r.electric_kwh:>14.3f}"
                         f"{r.cooling_kwh:>13.3f}{r.cycles:>8}{r.mean_t_ai:>11.3f}")
        if self.pairs:
            lines.append("")
            lines.append(f"{'pair':<25}{'RMSE t_ai':>10}{'bias t_ai':>10}{'d elec kWh':>12}")
            for p in self.pairs:
                lines.append(f"{p.name_a + ' vs ' + p.name_b:<25}"
                             f"{p.rmse_t_ai:>10.3f}{p.bias_t_ai:>10.3f}{p.delta_electric_kwh:>12.3f}")
        return "\n".join(lines)


def summarize_run(name: str, hourly: list[HourlyRecord]) -> RunSummary:
    hours = len(hourly)
    return RunSummary(
        name=name,
        hours=hours,
        electric_kwh=math.fsum(h.energy_wh for h in hourly) / 1000.0,
        cooling_kwh=math.fsum(abs(h.q_tot) for h in hourly) / 1000.0,
        cycles=sum(h.cycle_count for h in hourly),
        mean_t_ai=math.fsum(h.t_ai for h in hourly) / hours if hours else math.nan,
    )


def compare_models(runs: dict[str, list[HourlyRecord]]) -> ComparisonReport:
    """Pairwise comparison of hourly-aggregated runs over aligned hours."""
    if not runs:
        raise DomainError("nothing to compare")
    names = list(runs)
    axis = [h.hour_start for h in runs[names[0]]]
    for name in names[1:]:
        if [h.hour_start for h in runs[name]] != axis:
            raise DomainError(f"run {name!r} is not aligned with {names[0]!r}")
    if not axis:
        raise DomainError("runs contain no whole hours")

    summaries = {name: summarize_run(name, runs[name]) for name in names}
    pairs = []
    for a, b in itertools.combinations(names, 2):
        diffs = [ha.t_ai - hb.t_ai for ha, hb in zip(runs[a], runs[b])]
        pairs.append(PairStats(
            name_a=a, name_b=b,
            rmse_t_ai=math.sqrt(math.fsum(d * d for d in diffs) / len(diffs)),
            bias_t_ai=math.fsum(diffs) / len(diffs),
            delta_electric_kwh=summaries[a].electric_kwh - summaries[b].electric_kwh,
        ))
    return ComparisonReport(runs=tuple(summaries[n] for n in names), pairs=tuple(pairs))
