"""Project file: one JSON document describing zone, unit, run window and paths.

Layout (all keys required unless noted):

    {
      "zone": {
        "volume_m3": ..., "air_capacity_j_per_k": ..., "air_renewal_flow_kg_s": ...,
        "walls": [ {"name": ..., "area_m2": ..., "k_cond_w_m2k": ...,
                    "c_si_j_m2k": ..., "c_se_j_m2k": ..., "h_ci_w_m2k": ...,
                    "h_ce_w_m2k": ..., "h_ri_w_m2k": ..., "h_re_w_m2k": ...,
                    "solar_aperture_ext": ..., "solar_aperture_int": ...}, ... ]
      },
      "hvac": { "model": 0|1|2, "q_nominal_total_kw": ..., "shf": ..., "cop": ...,
                "tau_s": ..., "dead_half_band_k": ..., "t_set_c": ...,
                "w_set_kg_kg": ...        (required for model 0),
                "airflow_m3_s": ..., "bypass_factor": ... },
      "sim": { "dt_s": ..., "start": ISO-8601 or null, "end": ISO-8601 or null,
               "initial_temp_c": number or null, "initial_w_kg_kg": number or null },
      "paths": { "weather_csv": ..., "coil_table_csv": ... (required for model 2),
                 "output_dir": ... }
    }

Relative weather/coil paths resolve against the project file's directory;
``output_dir`` resolves against the working directory (the shipped default
project lives in the installed package, which may be read-only).

Validation reports every problem in one pass.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from datetime import datetime
from pathlib import Path

from .coil import fit_capacity_regression, load_coil_table_csv
from .envelope import WallSurface, ZoneConfig
from .errors import ValidationError
from .hvac import HvacConfig
from .simulate import SimConfig, StepRecord, run_simulation
from .weather import load_weather_csv


@dataclass(frozen=True)
class ProjectConfig:
    zone: ZoneConfig
    hvac: HvacConfig
    sim: SimConfig
    weather_path: Path
    coil_table_path: Path | None
    output_dir: Path


_WALL_FIELDS = {
    "area_m2": "positive", "k_cond_w_m2k": "positive",
    "c_si_j_m2k": "non-negative", "c_se_j_m2k": "non-negative",
    "h_ci_w_m2k": "non-negative", "h_ce_w_m2k": "non-negative",
    "h_ri_w_m2k": "non-negative", "h_re_w_m2k": "non-negative",
    "solar_aperture_ext": "non-negative", "solar_aperture_int": "non-negative",
}


def _number(section: dict, key: str, ctx: str, errors: list[str], kind: str = "any",
            required: bool = True) -> float | None:
    if key not in section or section[key] is None:
        if required:
            errors.append(f"{ctx}: missing field {key!r}")
        return None
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        errors.append(f"{ctx}: {key} must be a number, got {value!r}")
        return None
    value = float(value)
    if kind == "positive" and value <= 0.0:
        errors.append(f"{ctx}: {key} must be positive, got {value}")
    elif kind == "non-negative" and value < 0.0:
        errors.append(f"{ctx}: {key} must be non-negative, got {value}")
    elif kind == "fraction" and not 0.0 <= value <= 1.0:
        errors.append(f"{ctx}: {key} must be within [0, 1], got {value}")
    return value


def _timestamp(section: dict, key: str, ctx: str, errors: list[str]) -> datetime | None:
    value = section.get(key)
    if value is None:
        return None
    try:
        return datetime.fromisoformat(value)
    except (TypeError, ValueError):
        errors.append(f"{ctx}: {key} must be an ISO-8601 timestamp, got {value!r}")
        return None


def _known_keys(section: dict, allowed: set[str], ctx: str, errors: list[str]) -> None:
    for key in section:
        if key not in allowed:
            errors.append(f"{ctx}: unknown field {key!r}")


def load_project(path: str | Path) -> ProjectConfig:
    """Parse and fully validate a project file.

    Raises:
        ValidationError: carrying the complete list of problems found.
    """
    path = Path(path)
    if not path.exists():
        raise ValidationError([f"project file not found: {path}"])
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError([f"{path}: JSON parse error at line {exc.lineno}: {exc.msg}"]) from exc

    errors: list[str] = []
    if not isinstance(doc, dict):
        raise ValidationError([f"{path}: top level must be an object"])
    _known_keys(doc, {"zone", "hvac", "sim", "paths"}, str(path), errors)
    for section in ("zone", "hvac", "sim", "paths"):
        if not isinstance(doc.get(section), dict):
            errors.append(f"{path}: missing or malformed section {section!r}")
    if errors:
        raise ValidationError(errors)

    zone_doc, hvac_doc, sim_doc, paths_doc = doc["zone"], doc["hvac"], doc["sim"], doc["paths"]

    # --- zone ---
    _known_keys(zone_doc, {"volume_m3", "air_capacity_j_per_k", "air_renewal_flow_kg_s", "walls"},
                "zone", errors)
    volume = _number(zone_doc, "volume_m3", "zone", errors, "positive")
    air_cap = _number(zone_doc, "air_capacity_j_per_k", "zone", errors, "positive")
    renewal = _number(zone_doc, "air_renewal_flow_kg_s", "zone", errors, "non-negative")
    walls = []
    wall_docs = zone_doc.get("walls")
    if not isinstance(wall_docs, list) or not wall_docs:
        errors.append("zone: walls must be a non-empty list")
        wall_docs = []
    for i, wall_doc in enumerate(wall_docs):
        ctx = f"zone.walls[{i}]"
        if not isinstance(wall_doc, dict):
            errors.append(f"{ctx}: must be an object")
            continue
        _known_keys(wall_doc, set(_WALL_FIELDS) | {"name"}, ctx, errors)
        fields = {key: _number(wall_doc, key, ctx, errors, kind) for key, kind in _WALL_FIELDS.items()}
        if all(v is not None for v in fields.values()):
            walls.append(WallSurface(
                area=fields["area_m2"], k_cond=fields["k_cond_w_m2k"],
                c_si=fields["c_si_j_m2k"], c_se=fields["c_se_j_m2k"],
                h_ci=fields["h_ci_w_m2k"], h_ce=fields["h_ce_w_m2k"],
                h_ri=fields["h_ri_w_m2k"], h_re=fields["h_re_w_m2k"],
                solar_aperture_ext=fields["solar_aperture_ext"],
                solar_aperture_int=fields["solar_aperture_int"],
                name=str(wall_doc.get("name", f"wall{i}")),
            ))

    # --- hvac ---
    _known_keys(hvac_doc, {"model", "q_nominal_total_kw", "shf", "cop", "tau_s", "dead_half_band_k",
                           "t_set_c", "w_set_kg_kg", "airflow_m3_s", "bypass_factor"}, "hvac", errors)
    model = hvac_doc.get("model")
    if model not in (0, 1, 2):
        errors.append(f"hvac: model must be 0, 1 or 2, got {model!r}")
    q_nom = _number(hvac_doc, "q_nominal_total_kw", "hvac", errors, "positive")
    shf = _number(hvac_doc, "shf", "hvac", errors)
    if shf is not None and not 0.0 < shf <= 1.0:
        errors.append(f"hvac: shf must be in (0, 1], got {shf}")
    cop = _number(hvac_doc, "cop", "hvac", errors, "positive")
    tau = _number(hvac_doc, "tau_s", "hvac", errors, "positive")
    band = _number(hvac_doc, "dead_half_band_k", "hvac", errors, "positive")
    t_set = _number(hvac_doc, "t_set_c", "hvac", errors)
    w_set = _number(hvac_doc, "w_set_kg_kg", "hvac", errors, "non-negative", required=(model == 0))
    airflow = _number(hvac_doc, "airflow_m3_s", "hvac", errors, "positive")
    bf = _number(hvac_doc, "bypass_factor", "hvac", errors)
    if bf is not None and not 0.0 <= bf < 1.0:
        errors.append(f"hvac: bypass_factor must be in [0, 1), got {bf}")

    # --- sim ---
    _known_keys(sim_doc, {"dt_s", "start", "end", "initial_temp_c", "initial_w_kg_kg"}, "sim", errors)
    dt = _number(sim_doc, "dt_s", "sim", errors, "positive")
    if dt is not None and 3600.0 % dt != 0.0:
        errors.append(f"sim: dt_s must divide 3600 s, got {dt}")
    start = _timestamp(sim_doc, "start", "sim", errors)
    end = _timestamp(sim_doc, "end", "sim", errors)
    if start is not None and end is not None and start >= end:
        errors.append("sim: start must precede end")
    t_init = _number(sim_doc, "initial_temp_c", "sim", errors, required=False)
    w_init = _number(sim_doc, "initial_w_kg_kg", "sim", errors, "non-negative", required=False)

    # --- paths ---
    _known_keys(paths_doc, {"weather_csv", "coil_table_csv", "output_dir"}, "paths", errors)
    base = path.parent

    def resolve(key: str, required: bool) -> Path | None:
        raw = paths_doc.get(key)
        if raw is None:
            if required:
                errors.append(f"paths: missing field {key!r}")
            return None
        p = Path(raw)
        p = p if p.is_absolute() else base / p
        if not p.exists():
            errors.append(f"paths: {key} does not exist: {p}")
        return p

    weather_path = resolve("weather_csv", required=True)
    coil_path = resolve("coil_table_csv", required=(model == 2))
    output_dir = Path(paths_doc.get("output_dir", "out"))

    if errors:
        raise ValidationError(errors)

    return ProjectConfig(
        zone=ZoneConfig(air_capacity=air_cap, walls=tuple(walls), volume=volume,
                        air_renewal_flow=renewal),
        hvac=HvacConfig(model=model, q_nominal_total_kw=q_nom, shf=shf, cop=cop, tau_s=tau,
                        dead_half_band_k=band, t_set_c=t_set, w_set=w_set,
                        airflow_m3_s=airflow, bypass_factor=bf),
        sim=SimConfig(dt_s=dt, start=start, end=end, initial_temp_c=t_init, initial_w=w_init),
        weather_path=weather_path,
        coil_table_path=coil_path,
        output_dir=output_dir,
    )


def run_project(project: ProjectConfig) -> list[StepRecord]:
    """Load inputs, fit the coil map when model 2 asks for it, run the loop."""
    weather = load_weather_csv(project.weather_path)
    hvac_cfg = project.hvac
    if hvac_cfg.model == 2 and hvac_cfg.regression is None:
        table = load_coil_table_csv(project.coil_table_path)
        hvac_cfg = replace(hvac_cfg, regression=fit_capacity_regression(table))
    return run_simulation(project.zone, hvac_cfg, weather, project.sim)
