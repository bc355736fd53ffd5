"""Cooling-coil performance map fitted from manufacturer rating data.

The rating table lists total capacity, sensible capacity and electric power
of a split-system unit over a grid of outdoor temperatures and indoor
wet-bulb temperatures, all at one indoor dry-bulb reference temperature.
Capacities at the reference dry bulb are modelled as bilinear in
(outdoor temperature, entering-air specific enthalpy):

    stage 1: per outdoor temperature, least-squares lines against enthalpy
                q_tot  = a0 + a1 h_ent        q_sens = b0 + b1 h_ent
    stage 2: least-squares lines of a0, a1, b0, b1 against outdoor
             temperature, giving the eight coefficients c1..c8

    q_tot(ref)  = c1 + c2 t_ext + (c3 + c4 t_ext) h_ent
    q_sens(ref) = c5 + c6 t_ext + (c7 + c8 t_ext) h_ent

Off the reference dry bulb, total capacity is held constant at equal
entering enthalpy and the sensible share is corrected through the coil
bypass factor (see ``bypass_corrected_sensible``); the latent share is the
remainder. Electric power is a single line in outdoor temperature,
fitted on the reference wet-bulb column.

Queries outside the fitted grid are clamped to its boundary and flagged:
beyond the rating grid the linear laws stop being trustworthy.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import FittingError, ValidationError
from .psychro import CP_MOIST_KJ


class CoilPoint(NamedTuple):
    """One rating-table row (capacities in kW)."""

    t_ext: float
    t_wb: float
    h_ent: float
    q_tot: float
    q_sens: float
    power: float


@dataclass(frozen=True)
class CoilPerformanceTable:
    """Manufacturer rating grid plus the unit constants printed with it."""

    rows: tuple[CoilPoint, ...]
    t_db_ref: float = 27.0  # indoor dry bulb the grid was measured at, degC
    bypass_factor: float = 0.04
    airflow: float = 0.110  # m3/s, as printed on the rating sheet

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        errors = []
        if not 0.0 <= self.bypass_factor < 1.0:
            errors.append(f"bypass factor must be in [0, 1), got {self.bypass_factor}")
        if self.airflow <= 0.0:
            errors.append(f"airflow must be positive, got {self.airflow}")
        if not self.rows:
            errors.append("rating table has no rows")
        for i, row in enumerate(self.rows):
            if not 0.0 < row.q_sens <= row.q_tot:
                errors.append(f"row {i}: requires 0 < q_sens <= q_tot, got {row.q_sens}/{row.q_tot}")
            if row.power <= 0.0:
                errors.append(f"row {i}: power must be positive, got {row.power}")
        # the (t_ext, t_wb) points must form a rectangular grid
        wetbulbs_by_text: dict[float, list[float]] = {}
        for row in self.rows:
            wetbulbs_by_text.setdefault(row.t_ext, []).append(row.t_wb)
        shapes = {tuple(sorted(v)) for v in wetbulbs_by_text.values()}
        if len(shapes) > 1:
            errors.append("rating rows do not form a rectangular (t_ext, t_wb) grid")
        if errors:
            raise ValidationError(errors)

    def outdoor_temps(self) -> list[float]:
        return sorted({row.t_ext for row in self.rows})


_COIL_COLUMNS = ["t_ext_c", "t_wb_c", "h_ent_kj_kg", "q_tot_kw", "q_sens_kw", "power_kw"]
_COIL_META = {"indoor_dry_bulb_c": "t_db_ref", "bypass_factor": "bypass_factor", "airflow_m3_s": "airflow"}


def load_coil_table_csv(path: str | Path) -> CoilPerformanceTable:
    """Read a rating table CSV.

    Leading ``# key: value`` comment lines carry the sheet constants
    (indoor_dry_bulb_c, bypass_factor, airflow_m3_s); the column header must
    match ``t_ext_c,t_wb_c,h_ent_kj_kg,q_tot_kw,q_sens_kw,power_kw``.
    """
    path = Path(path)
    meta: dict[str, float] = {}
    data_lines: list[str] = []
    errors: list[str] = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if ":" in body:
                key, _, value = body.partition(":")
                key = key.strip()
                if key in _COIL_META:
                    try:
                        meta[_COIL_META[key]] = float(value)
                    except ValueError:
                        errors.append(f"line {lineno}: bad value for {key}: {value.strip()!r}")
            continue
        data_lines.append(line)

    if not data_lines:
        raise ValidationError([f"{path}: no data rows"])
    reader = csv.DictReader(data_lines)
    if reader.fieldnames != _COIL_COLUMNS:
        raise ValidationError([f"{path}: expected columns {_COIL_COLUMNS}, got {reader.fieldnames}"])
    rows = []
    for i, rec in enumerate(reader, start=2):
        try:
            rows.append(CoilPoint(*(float(rec[c]) for c in _COIL_COLUMNS)))
        except (TypeError, ValueError):
            errors.append(f"{path}: unparsable numeric data in row {i}")
    if errors:
        raise ValidationError(errors)
    return CoilPerformanceTable(rows=tuple(rows), **meta)


@dataclass(frozen=True)
class CoilRegression:
    """Fitted coefficients of the capacity surfaces and the power line."""

    c1: float
    c2: float
    c3: float
    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    p0: float  # kW
    p1: float  # kW per degC of outdoor temperature
    t_ext_range: tuple[float, float]
    h_ent_range: tuple[float, float]
    t_db_ref: float = 27.0

    def __post_init__(self):
        if self.p1 <= 0.0:
            raise FittingError(f"power must rise with outdoor temperature, fitted slope {self.p1}")

    def total_line(self, t_ext: float) -> tuple[float, float]:
        """(a0, a1) of q_tot = a0 + a1 h_ent at this outdoor temperature."""
        return self.c1 + self.c2 * t_ext, self.c3 + self.c4 * t_ext

    def sensible_line(self, t_ext: float) -> tuple[float, float]:
        """(b0, b1) of q_sens = b0 + b1 h_ent at this outdoor temperature."""
        return self.c5 + self.c6 * t_ext, self.c7 + self.c8 * t_ext

    def power_kw(self, t_ext: float) -> float:
        return self.p0 + self.p1 * t_ext


def _line_fit(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Least-squares intercept and slope of y against x."""
    design = np.column_stack([np.ones_like(x), x])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return float(coef[0]), float(coef[1])


def fit_capacity_regression(table: CoilPerformanceTable, max_outdoor_temp: float = 35.0,
                            reference_wetbulb: float = 19.0) -> CoilRegression:
    """Two-stage least-squares fit of the rating grid.

    Rows above ``max_outdoor_temp`` are dropped before fitting (outside the
    unit's operating range, where the capacity trends bend). The power line
    is fitted on the ``reference_wetbulb`` column only; across the grid the
    rated power varies by a few percent with wet bulb, so one column fixes
    the line.

    Raises:
        FittingError: fewer than two outdoor temperatures or two enthalpy
            points survive the cut, or no rows at the reference wet bulb.
    """
    rows = [row for row in table.rows if row.t_ext <= max_outdoor_temp]
    by_text: dict[float, list[CoilPoint]] = {}
    for row in rows:
        by_text.setdefault(row.t_ext, []).append(row)
    texts = sorted(by_text)
    if len(texts) < 2:
        raise FittingError(f"need >= 2 outdoor temperatures <= {max_outdoor_temp}, got {len(texts)}")

    a0s, a1s, b0s, b1s = [], [], [], []
    for t_ext in texts:
        pts = by_text[t_ext]
        h = np.array([p.h_ent for p in pts])
        if len(set(h.tolist())) < 2:
            raise FittingError(f"need >= 2 distinct enthalpies at t_ext={t_ext}")
        a0, a1 = _line_fit(h, np.array([p.q_tot for p in pts]))
        b0, b1 = _line_fit(h, np.array([p.q_sens for p in pts]))
        a0s.append(a0)
        a1s.append(a1)
        b0s.append(b0)
        b1s.append(b1)

    t_arr = np.array(texts)
    c1, c2 = _line_fit(t_arr, np.array(a0s))
    c3, c4 = _line_fit(t_arr, np.array(a1s))
    c5, c6 = _line_fit(t_arr, np.array(b0s))
    c7, c8 = _line_fit(t_arr, np.array(b1s))

    power_rows = [row for row in rows if abs(row.t_wb - reference_wetbulb) < 1e-9]
    if len({row.t_ext for row in power_rows}) < 2:
        raise FittingError(f"need >= 2 power points at wet bulb {reference_wetbulb} degC")
    p0, p1 = _line_fit(np.array([r.t_ext for r in power_rows]), np.array([r.power for r in power_rows]))

    h_all = [row.h_ent for row in rows]
    return CoilRegression(
        c1=c1, c2=c2, c3=c3, c4=c4, c5=c5, c6=c6, c7=c7, c8=c8,
        p0=p0, p1=p1,
        t_ext_range=(min(texts), max(texts)),
        h_ent_range=(min(h_all), max(h_all)),
        t_db_ref=table.t_db_ref,
    )


class ReferenceCapacities(NamedTuple):
    q_tot: float  # kW, at the reference indoor dry bulb
    q_sens: float  # kW, at the reference indoor dry bulb
    clamped: bool  # True when the query was pulled back onto the fitted grid


def capacities_at_reference(reg: CoilRegression, h_ent: float, t_ext: float) -> ReferenceCapacities:
    """Evaluate the fitted capacity surfaces, clamping inputs to the grid."""
    t_lo, t_hi = reg.t_ext_range
    h_lo, h_hi = reg.h_ent_range
    t_c = min(max(t_ext, t_lo), t_hi)
    h_c = min(max(h_ent, h_lo), h_hi)
    a0, a1 = reg.total_line(t_c)
    b0, b1 = reg.sensible_line(t_c)
    return ReferenceCapacities(
        q_tot=a0 + a1 * h_c,
        q_sens=b0 + b1 * h_c,
        clamped=(t_c != t_ext) or (h_c != h_ent),
    )


def bypass_corrected_sensible(q_sens_ref: float, t_entry: float, v_entry: float,
                              airflow: float, bypass_factor: float,
                              t_db_ref: float = 27.0, cp_moist: float = CP_MOIST_KJ) -> float:
    """Shift the reference-dry-bulb sensible capacity to the actual entry temperature.

    At equal entering enthalpy the total capacity (and hence the apparatus
    dew point) is taken as invariant, so the sensible share changes only
    through the temperature of the air crossing the coil surface:

        q_sens' = q_sens_ref + (airflow / v) cp_m (1 - BF) (t_ref - t_entry)

    Capacities in kW (cp_m in kJ/(kg K) keeps the units consistent);
    ``v_entry`` is the specific volume of the entering air in m3/kg.
    """
    return q_sens_ref + (airflow / v_entry) * cp_moist * (1.0 - bypass_factor) * (t_db_ref - t_entry)


class SplitCapacities(NamedTuple):
    q_sens: float  # kW
    q_lat: float  # kW
    dry_coil: bool  # True when the latent share clamped at zero


def split_capacities(q_tot: float, q_sens_corrected: float) -> SplitCapacities:
    """Latent capacity as the remainder of total over sensible.

    A corrected sensible share above the total means the coil surface stays
    above the entering dew point: the coil runs dry, all capacity sensible.
    """
    q_lat = q_tot - q_sens_corrected
    if q_lat < 0.0:
        return SplitCapacities(q_sens=q_tot, q_lat=0.0, dry_coil=True)
    return SplitCapacities(q_sens=q_sens_corrected, q_lat=q_lat, dry_coil=False)
