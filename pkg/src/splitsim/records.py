"""CSV persistence for step records and hourly aggregates.

Floats are written with ``repr`` so a write/read cycle reproduces every
value bit-exactly; timestamps are ISO 8601.
"""

from __future__ import annotations

import csv
from datetime import datetime
from pathlib import Path

from .errors import ValidationError
from .simulate import HourlyRecord, StepRecord

RECORD_COLUMNS = ["timestamp", "t_ai_c", "t_rm_c", "w_zone_kg_kg", "t_ae_c", "is_on",
                  "q_sens_w", "q_lat_w", "q_tot_w", "power_w", "warnings"]

HOURLY_COLUMNS = ["hour_start", "t_ai_c", "t_rm_c", "w_zone_kg_kg", "t_ae_c", "duty_cycle",
                  "q_sens_w", "q_lat_w", "q_tot_w", "power_w", "energy_wh", "cycle_count", "warnings"]


def write_records_csv(records: list[StepRecord], path: str | Path) -> None:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(RECORD_COLUMNS)
        for r in records:
            writer.writerow([
                r.timestamp.isoformat(), repr(r.t_ai), repr(r.t_rm), repr(r.w_zone),
                repr(r.t_ae), int(r.is_on), repr(r.q_sens), repr(r.q_lat), repr(r.q_tot),
                repr(r.power), r.warnings,
            ])


def read_records_csv(path: str | Path) -> list[StepRecord]:
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != RECORD_COLUMNS:
            raise ValidationError([f"{path}: expected columns {RECORD_COLUMNS}, got {reader.fieldnames}"])
        records = []
        errors = []
        for rownum, rec in enumerate(reader, start=2):
            try:
                records.append(StepRecord(
                    timestamp=datetime.fromisoformat(rec["timestamp"]),
                    t_ai=float(rec["t_ai_c"]), t_rm=float(rec["t_rm_c"]),
                    w_zone=float(rec["w_zone_kg_kg"]), t_ae=float(rec["t_ae_c"]),
                    is_on=bool(int(rec["is_on"])),
                    q_sens=float(rec["q_sens_w"]), q_lat=float(rec["q_lat_w"]),
                    q_tot=float(rec["q_tot_w"]), power=float(rec["power_w"]),
                    warnings=int(rec["warnings"]),
                ))
            except (TypeError, ValueError):
                errors.append(f"{path}: row {rownum}: unparsable data")
    if errors:
        raise ValidationError(errors)
    return records


def write_hourly_csv(hourly: list[HourlyRecord], path: str | Path) -> None:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(HOURLY_COLUMNS)
        for h in hourly:
            writer.writerow([
                h.hour_start.isoformat(), repr(h.t_ai), repr(h.t_rm), repr(h.w_zone),
                repr(h.t_ae), repr(h.duty_cycle), repr(h.q_sens), repr(h.q_lat),
                repr(h.q_tot), repr(h.power), repr(h.energy_wh), h.cycle_count, h.warnings,
            ])
