"""Hourly weather series: ingestion, validation, minute-level interpolation."""

from __future__ import annotations

import csv
import math
from bisect import bisect_right
from dataclasses import dataclass
from datetime import datetime, timedelta
from pathlib import Path

from .envelope import BoundarySample
from .errors import DomainError, ValidationError
from .psychro import humidity_ratio_from_rh

HOUR_S = 3600.0

WEATHER_COLUMNS = ["timestamp", "t_ae_c", "rh_out", "g_horiz_w_m2", "wind_speed_m_s"]


@dataclass(frozen=True)
class WeatherSample:
    """One hourly observation."""

    timestamp: datetime
    t_ae: float  # degC
    rh_out: float  # fraction 0..1
    g_horiz: float  # W/m2
    wind_speed: float = 0.0  # m/s, carried but unused by the zone model


@dataclass(frozen=True)
class WeatherSeries:
    """Strictly hourly, strictly increasing sequence of samples."""

    samples: tuple[WeatherSample, ...]

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        errors = []
        if not self.samples:
            errors.append("weather series is empty")
        for i, s in enumerate(self.samples):
            values = (s.t_ae, s.rh_out, s.g_horiz, s.wind_speed)
            if not all(math.isfinite(v) for v in values):
                errors.append(f"sample {i}: non-finite value")
            if not 0.0 <= s.rh_out <= 1.0:
                errors.append(f"sample {i}: relative humidity {s.rh_out} outside [0, 1]")
            if s.g_horiz < 0.0:
                errors.append(f"sample {i}: negative irradiance {s.g_horiz}")
            if i > 0:
                gap = (s.timestamp - self.samples[i - 1].timestamp).total_seconds()
                if gap <= 0.0:
                    errors.append(f"sample {i}: timestamps not strictly increasing")
                elif gap != HOUR_S:
                    errors.append(f"sample {i}: spacing is {gap:.0f} s, expected 3600 s")
        if errors:
            raise ValidationError(errors)
        object.__setattr__(self, "_epochs", tuple(s.timestamp.timestamp() for s in self.samples))

    @property
    def start(self) -> datetime:
        return self.samples[0].timestamp

    @property
    def end(self) -> datetime:
        return self.samples[-1].timestamp

    def __len__(self) -> int:
        return len(self.samples)


def load_weather_csv(path: str | Path) -> WeatherSeries:
    """Read an hourly weather CSV.

    Header must be ``timestamp,t_ae_c,rh_out,g_horiz_w_m2,wind_speed_m_s``
    with ISO-8601 timestamps. Every malformed row is reported (with its row
    number) in a single ValidationError.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != WEATHER_COLUMNS:
            raise ValidationError([f"{path}: expected columns {WEATHER_COLUMNS}, got {reader.fieldnames}"])
        samples = []
        errors = []
        for rownum, rec in enumerate(reader, start=2):
            try:
                sample = WeatherSample(
                    timestamp=datetime.fromisoformat(rec["timestamp"]),
                    t_ae=float(rec["t_ae_c"]),
                    rh_out=float(rec["rh_out"]),
                    g_horiz=float(rec["g_horiz_w_m2"]),
                    wind_speed=float(rec["wind_speed_m_s"]),
                )
            except (TypeError, ValueError):
                errors.append(f"{path}: row {rownum}: unparsable data")
                continue
            if not 0.0 <= sample.rh_out <= 1.0:
                errors.append(f"{path}: row {rownum}: relative humidity {sample.rh_out} outside [0, 1]")
            if sample.g_horiz < 0.0:
                errors.append(f"{path}: row {rownum}: negative irradiance {sample.g_horiz}")
            if samples:
                gap = (sample.timestamp - samples[-1].timestamp).total_seconds()
                if gap <= 0.0:
                    errors.append(f"{path}: row {rownum}: timestamps not strictly increasing")
                elif gap != HOUR_S:
                    errors.append(f"{path}: row {rownum}: spacing is {gap:.0f} s, expected 3600 s")
            samples.append(sample)
    if errors:
        raise ValidationError(errors)
    return WeatherSeries(samples=tuple(samples))


def outdoor_humidity_ratio(sample: WeatherSample, p_atm_kpa: float = 101.325) -> float:
    return humidity_ratio_from_rh(sample.t_ae, sample.rh_out, p_atm_kpa)


def interpolate_weather(series: WeatherSeries, t: datetime) -> tuple[BoundarySample, float]:
    """Boundary sample plus outdoor humidity ratio at an arbitrary instant.

    Temperature and irradiance interpolate linearly between the bracketing
    hourly samples; humidity converts to humidity ratio at the two nodes
    first and interpolates in w-space.
    """
    epochs = series._epochs
    ts = t.timestamp()
    if ts < epochs[0] or ts > epochs[-1]:
        raise DomainError(f"{t.isoformat()} outside weather span "
                          f"[{series.start.isoformat()}, {series.end.isoformat()}]")
    i = bisect_right(epochs, ts)
    if i == len(epochs) or epochs[i - 1] == ts:
        s = series.samples[i - 1]
        return BoundarySample(t_ae=s.t_ae, g_horiz=s.g_horiz), outdoor_humidity_ratio(s)
    lo, hi = series.samples[i - 1], series.samples[i]
    frac = (ts - epochs[i - 1]) / (epochs[i] - epochs[i - 1])
    t_ae = lo.t_ae + frac * (hi.t_ae - lo.t_ae)
    g = lo.g_horiz + frac * (hi.g_horiz - lo.g_horiz)
    w = outdoor_humidity_ratio(lo) + frac * (outdoor_humidity_ratio(hi) - outdoor_humidity_ratio(lo))
    return BoundarySample(t_ae=t_ae, g_horiz=g), w


def make_synthetic_week(start: datetime, days: int = 7) -> WeatherSeries:
    """Deterministic hot-day / cool-night tropical pattern, hourly samples.

    Days peak near 35 degC mid-afternoon and nights drop to ~21 degC, so a
    conditioned zone cycles through the day and coasts with the unit off
    overnight. Used to generate the weather file shipped with the default
    scenario; kept here so the file can be regenerated byte-identically.
    """
    samples = []
    for k in range(days * 24 + 1):
        h = k % 24
        day = k // 24
        diurnal = math.sin(math.pi * (h - 7.0) / 12.0)  # peaks mid-afternoon
        t_amp = 6.8 + 0.3 * math.sin(2.0 * math.pi * day / 7.0)
        t_ae = 28.0 + t_amp * diurnal
        rh = min(0.95, max(0.5, 0.74 - 0.10 * diurnal))
        g = 880.0 * max(0.0, math.sin(math.pi * (h - 6.0) / 12.0)) if 6.0 <= h <= 18.0 else 0.0
        wind = 3.0 + 1.5 * max(0.0, diurnal)
        samples.append(WeatherSample(
            timestamp=start + timedelta(hours=k),
            t_ae=round(t_ae, 3),
            rh_out=round(rh, 4),
            g_horiz=round(g, 1),
            wind_speed=round(wind, 2),
        ))
    return WeatherSeries(samples=tuple(samples))


def write_weather_csv(series: WeatherSeries, path: str | Path) -> None:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(WEATHER_COLUMNS)
        for s in series.samples:
            writer.writerow([s.timestamp.isoformat(), repr(s.t_ae), repr(s.rh_out),
                             repr(s.g_horiz), repr(s.wind_speed)])
