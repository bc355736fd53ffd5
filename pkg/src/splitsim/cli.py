"""Command-line surface.

Subcommands:

    simulate   run a project file, write the step-record CSV
    fit-coil   fit the performance map from a rating-table CSV, print it
    aggregate  average a minute-level record CSV to hourly rows
    compare    hourly comparison report across run CSVs
    psychro    moist-air property lookup for debugging

Exit codes: 0 success, 1 validation/configuration error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import psychro
from .coil import capacities_at_reference, fit_capacity_regression, load_coil_table_csv
from .errors import ConfigurationError, DomainError, SplitsimError, ValidationError
from .project import load_project, run_project
from .records import read_records_csv, write_hourly_csv, write_records_csv
from .simulate import aggregate_hourly, compare_models, summarize_run


def _cmd_simulate(args) -> int:
    project = load_project(args.project)
    if args.model is not None:
        project = replace(project, hvac=replace(project.hvac, model=args.model))
        if project.hvac.model == 2 and project.coil_table_path is None:
            raise ValidationError(["--model 2 needs a coil table path in the project file"])
    if args.t_set is not None:
        project = replace(project, hvac=replace(project.hvac, t_set_c=args.t_set))
    if args.dt is not None:
        project = replace(project, sim=replace(project.sim, dt_s=args.dt))

    records = run_project(project)

    out_path = Path(args.output) if args.output else project.output_dir / f"records_model{project.hvac.model}.csv"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    write_records_csv(records, out_path)

    hourly = aggregate_hourly(records)
    summary = summarize_run(out_path.stem, hourly)
    print(f"wrote {len(records)} records to {out_path}")
    print(f"hours {summary.hours}  electric {summary.electric_kwh:.3f} kWh  "
          f"cooling {summary.cooling_kwh:.3f} kWh  cycles {summary.cycles}  "
          f"mean t_ai {summary.mean_t_ai:.2f} C")
    return 0


def _cmd_fit_coil(args) -> int:
    table = load_coil_table_csv(args.table)
    reg = fit_capacity_regression(table)
    for name in ("c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "p0", "p1"):
        print(f"{name} = {getattr(reg, name):+.10f}")
    print(f"valid for t_ext in {reg.t_ext_range} C, h_ent in {reg.h_ent_range} kJ/kg")
    print()
    print(f"{'t_ext':>6}{'t_wb':>6}{'h_ent':>7}{'q_tot':>8}{'fit':>8}{'err%':>7}"
          f"{'q_sens':>8}{'fit':>8}{'err%':>7}")
    worst_tot = worst_sens = 0.0
    for row in table.rows:
        if row.t_ext > reg.t_ext_range[1]:
            continue
        pred = capacities_at_reference(reg, row.h_ent, row.t_ext)
        err_tot = (pred.q_tot - row.q_tot) / row.q_tot
        err_sens = (pred.q_sens - row.q_sens) / row.q_sens
        worst_tot = max(worst_tot, abs(err_tot))
        worst_sens = max(worst_sens, abs(err_sens))
        print(f"{row.t_ext:>6.1f}{row.t_wb:>6.1f}{row.h_ent:>7.1f}"
              f"{row.q_tot:>8.3f}{pred.q_tot:>8.3f}{err_tot * 100:>7.2f}"
              f"{row.q_sens:>8.3f}{pred.q_sens:>8.3f}{err_sens * 100:>7.2f}")
    print(f"\nmax |err| total {worst_tot * 100:.2f}%  sensible {worst_sens * 100:.2f}%")
    return 0


def _cmd_aggregate(args) -> int:
    records = read_records_csv(args.run)
    hourly = aggregate_hourly(records)
    out_path = Path(args.output) if args.output else Path(args.run).with_name(
        Path(args.run).stem + "_hourly.csv")
    write_hourly_csv(hourly, out_path)
    print(f"wrote {len(hourly)} hourly rows to {out_path}")
    return 0


def _cmd_compare(args) -> int:
    labels = args.labels.split(",") if args.labels else [Path(p).stem for p in args.runs]
    if len(labels) != len(args.runs):
        raise ValidationError([f"{len(args.runs)} runs but {len(labels)} labels"])
    runs = {}
    for label, p in zip(labels, args.runs):
        records = read_records_csv(p)
        runs[label] = aggregate_hourly(records)
    print(compare_models(runs).format_table())
    return 0


def _cmd_psychro(args) -> int:
    p = args.pressure
    if args.rh is not None:
        w = psychro.humidity_ratio_from_rh(args.t_db, args.rh, p)
    else:
        w = psychro.humidity_ratio_from_wetbulb(args.t_db, args.twb, p)
    print(f"t_db          {args.t_db:.2f} C")
    print(f"p_atm         {p:.3f} kPa")
    print(f"p_ws          {psychro.saturation_vapor_pressure(args.t_db):.4f} kPa")
    print(f"w             {w:.6f} kg/kg")
    print(f"rh            {psychro.relative_humidity(args.t_db, w, p):.4f}")
    print(f"enthalpy      {psychro.moist_air_enthalpy(args.t_db, w):.3f} kJ/kg")
    print(f"spec. volume  {psychro.specific_volume(args.t_db, w, p):.5f} m3/kg")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitsim",
                                     description="Zone / split-system heat-pump co-simulation.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run a project file and write the record CSV")
    p_sim.add_argument("project", help="path to the project JSON file")
    p_sim.add_argument("--model", type=int, choices=(0, 1, 2), help="override hvac.model")
    p_sim.add_argument("--dt", type=float, help="override sim.dt_s (seconds)")
    p_sim.add_argument("--t-set", type=float, dest="t_set", help="override hvac.t_set_c")
    p_sim.add_argument("--output", help="explicit output CSV path")
    p_sim.set_defaults(func=_cmd_simulate)

    p_fit = sub.add_parser("fit-coil", help="fit the performance map from a rating-table CSV")
    p_fit.add_argument("table", help="rating table CSV")
    p_fit.set_defaults(func=_cmd_fit_coil)

    p_agg = sub.add_parser("aggregate", help="average a record CSV to hourly rows")
    p_agg.add_argument("run", help="step-record CSV")
    p_agg.add_argument("--output", help="hourly CSV path")
    p_agg.set_defaults(func=_cmd_aggregate)

    p_cmp = sub.add_parser("compare", help="hourly comparison report across runs")
    p_cmp.add_argument("runs", nargs="+", help="two or more step-record CSVs")
    p_cmp.add_argument("--labels", help="comma-separated run labels (default: file stems)")
    p_cmp.set_defaults(func=_cmd_compare)

    p_psy = sub.add_parser("psychro", help="moist-air property lookup")
    p_psy.add_argument("t_db", type=float, help="dry-bulb temperature, degC")
    group = p_psy.add_mutually_exclusive_group(required=True)
    group.add_argument("--rh", type=float, help="relative humidity, 0..1")
    group.add_argument("--twb", type=float, help="wet-bulb temperature, degC")
    p_psy.add_argument("--pressure", type=float, default=psychro.P_ATM_KPA, help="total pressure, kPa")
    p_psy.set_defaults(func=_cmd_psychro)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValidationError as exc:
        for problem in exc.errors:
            print(f"error: {problem}", file=sys.stderr)
        return 1
    except (ConfigurationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SplitsimError as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
