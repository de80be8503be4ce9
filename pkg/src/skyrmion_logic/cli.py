"""Command-line interface: trajectories, plans, performance reports,
cascade traces, gate tables and the design-space sweep.

All data goes to stdout or to files under ``--out``; diagnostics go to
stderr only.  Exit status: 0 on success, 1 when a result that must be
feasible is not (annihilated trajectory, infeasible layout, empty sweep),
2 on configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import dse
from .circuit import (GateKind, GateState, cascade, evaluate_gate,
                      mtj_resistance, next_stage_current,
                      nucleation_current_density, nucleation_decision,
                      output_voltage)
from .config import ConfigError, RunConfig, load_config
from .device import thiele_constants
from .performance import propagation_energy, total_performance
from .planner import plan, steady_deflection_summary
from .trajectory import Outcome, simulate, trajectory_to_csv

_SCALES = {
    "s": (1e12, "ps"),
    "m": (1e9, "nm"),
    "V": (1e3, "mV"),
    "A": (1e6, "uA"),
}


def fmt(value: float, unit: str) -> str:
    """Raw SI value plus a human-scaled rendering."""
    if unit == "J":  # stage energies span aJ to fJ
        scale, suffix = (1e15, "fJ") if abs(value) >= 1e-15 else (1e18, "aJ")
    elif unit in _SCALES:
        scale, suffix = _SCALES[unit]
    else:
        return f"{value:.6e} {unit}"
    return f"{value:.6e} {unit} ({value * scale:.4f} {suffix})"


def _emit(text: str, out_dir: str | None, filename: str) -> None:
    if out_dir is None:
        sys.stdout.write(text)
    else:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / filename).write_text(text, encoding="utf-8", newline="\n")


def _report(pairs: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)} : {v}" for k, v in pairs) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skyrmion-logic",
        description="Skyrmion racetrack logic device simulator")
    ap.add_argument("command", choices=["trajectory", "plan", "perf",
                                        "cascade", "gate", "dse"])
    ap.add_argument("--config", metavar="PATH", default=None)
    ap.add_argument("--out", metavar="DIR", default=None)
    ap.add_argument("--jx", type=float, default=None,
                    help="override the longitudinal current density, A/m^2")
    ap.add_argument("--jy", type=float, default=None,
                    help="override the repeater current density, A/m^2")
    ap.add_argument("--format", choices=["csv", "report"], default="csv")
    ap.add_argument("--p-max", type=int, default=None,
                    help="override the repeater budget")
    ap.add_argument("--workers", type=int, default=1,
                    help="worker threads for the dse sweep")
    return ap


def _prepare(args) -> RunConfig:
    cfg = load_config(args.config)
    drive = cfg.drive
    if args.jx is not None:
        drive = replace(drive, jx=args.jx)
    if args.jy is not None:
        drive = replace(drive, jy=args.jy)
    planner = cfg.planner
    if args.p_max is not None:
        planner = replace(planner, p_max=args.p_max)
    return replace(cfg, drive=drive, planner=planner)


def _plan_and_run(cfg: RunConfig):
    tc = thiele_constants(cfg.material, cfg.geometry, cfg.drive, cfg.constants)
    layout = plan(tc, cfg.geometry, cfg.planner.p_max,
                  safety_buffer=cfg.planner.safety_buffer,
                  margin_slack=cfg.planner.margin_slack)
    traj = simulate(tc, cfg.geometry, layout,
                    margin_slack=cfg.planner.margin_slack)
    return tc, layout, traj


def _layout_report(cfg: RunConfig, tc, layout) -> str:
    pairs = [("feasible", str(layout.feasible).lower()),
             ("reason", layout.infeasibility_reason.value),
             ("p", str(layout.p))]
    for i, (a, b) in enumerate(layout.intervals):
        pairs.append((f"interval_{i}", f"[{fmt(a, 'm')}, {fmt(b, 'm')}]"))
    diag = steady_deflection_summary(tc, cfg.geometry,
                                     safety_buffer=cfg.planner.safety_buffer,
                                     margin_slack=cfg.planner.margin_slack)
    pairs += [("steady_state_deflection", fmt(diag["steady_state_deflection"], "m")),
              ("trigger_ordinate", fmt(diag["trigger_ordinate"], "m")),
              ("annihilation_ordinate", fmt(diag["annihilation_ordinate"], "m")),
              ("note", "detector exclusion zone assumes a repeater-sized "
                       "footprint (l_det default)")]
    return _report(pairs)


def _perf_report(cfg: RunConfig, layout, traj) -> str:
    e_prop = propagation_energy(traj, layout, cfg.material, cfg.geometry,
                                cfg.drive, cfg.energy)
    r_mtj = mtj_resistance(cfg.mtj, skyrmion_present=True)
    rep = total_performance(t_prop=traj.t_prop, e_prop=e_prop, p=layout.p,
                            i_nuc=dse.nucleation_current(cfg), read=cfg.read,
                            r_mtj=r_mtj, ec=cfg.energy, geometry=cfg.geometry)
    pairs = [
        ("t_nuc", fmt(rep.t_nuc, "s")), ("t_prop", fmt(rep.t_prop, "s")),
        ("t_det", fmt(rep.t_det, "s")), ("t_total", fmt(rep.t_total, "s")),
        ("e_nuc", fmt(rep.e_nuc, "J")), ("e_prop", fmt(rep.e_prop, "J")),
        ("e_det", fmt(rep.e_det, "J")), ("e_tx", fmt(rep.e_tx, "J")),
        ("e_total", fmt(rep.e_total, "J")),
        ("edp_total", fmt(rep.edp_total, "J s")),
        ("edp_prop", fmt(rep.edp_prop, "J s")),
        ("edp_nuc", fmt(rep.edp_nuc, "J s")),
        ("edp_det", fmt(rep.edp_det, "J s")),
        ("v_avg", fmt(rep.v_avg, "m/s")), ("p", str(rep.p)),
        ("r2_residency", fmt(traj.r2_residency, "s")),
    ]
    return _report(pairs)


def _cascade_trace(cfg: RunConfig) -> str:
    pairs: list[tuple[str, str]] = []
    for present in (False, True):
        bit = 1 if present else 0
        state = present
        pairs.append((f"input_{bit}", f"skyrmion {'present' if present else 'absent'}"))
        for stage in (1, 2):
            r = mtj_resistance(cfg.mtj, state)
            v = output_voltage(cfg.read, r)
            i = next_stage_current(cfg.transistor, v)
            j = nucleation_current_density(i, cfg.geometry)
            state = nucleation_decision(i, cfg.geometry, cfg.drive.j_c_nuc)
            pairs += [
                (f"input_{bit}.stage_{stage}.r_mtj", fmt(r, "ohm")),
                (f"input_{bit}.stage_{stage}.v_out", fmt(v, "V")),
                (f"input_{bit}.stage_{stage}.i_on", fmt(i, "A")),
                (f"input_{bit}.stage_{stage}.j_next", fmt(j, "A/m^2")),
                (f"input_{bit}.stage_{stage}.nucleated", str(state).lower()),
            ]
        pairs.append((f"input_{bit}.double_inversion_restores",
                      str(state == present).lower()))
    return _report(pairs)


def _gate_tables(cfg: RunConfig, traj, layout) -> str:
    e_prop = propagation_energy(traj, layout, cfg.material, cfg.geometry,
                                cfg.drive, cfg.energy)
    r_mtj = mtj_resistance(cfg.mtj, skyrmion_present=True)
    rep = total_performance(t_prop=traj.t_prop, e_prop=e_prop, p=layout.p,
                            i_nuc=dse.nucleation_current(cfg), read=cfg.read,
                            r_mtj=r_mtj, ec=cfg.energy, geometry=cfg.geometry)
    lines = ["gate,inputs,output,delay_s"]
    for a in (0, 1):
        out = evaluate_gate(GateState((bool(a),), GateKind.INVERTER))
        lines.append(f"Inverter,{a},{int(out)},{rep.t_total:.9e}")
    for a in (0, 1):
        for b in (0, 1):
            out = evaluate_gate(GateState((bool(a), bool(b)), GateKind.NOR2))
            lines.append(f"Nor2,{a}{b},{int(out)},{rep.t_total:.9e}")
    return "\n".join(lines) + "\n"


def run_command(argv: list[str]) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _prepare(args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "trajectory":
            _, _, traj = _plan_and_run(cfg)
            _emit(trajectory_to_csv(traj), args.out, "trajectory.csv")
            print(f"outcome: {traj.outcome.value}  t_prop: {traj.t_prop:.6e} s")
            return 0 if traj.outcome is Outcome.REACHED else 1

        if args.command == "plan":
            tc, layout, _ = _plan_and_run(cfg)
            _emit(_layout_report(cfg, tc, layout), args.out, "plan.txt")
            return 0 if layout.feasible else 1

        if args.command == "perf":
            _, layout, traj = _plan_and_run(cfg)
            if not layout.feasible or traj.outcome is not Outcome.REACHED:
                print("error: design point is infeasible; no performance "
                      "report", file=sys.stderr)
                return 1
            _emit(_perf_report(cfg, layout, traj), args.out, "perf.txt")
            return 0

        if args.command == "cascade":
            _emit(_cascade_trace(cfg), args.out, "cascade.txt")
            return 0

        if args.command == "gate":
            _, layout, traj = _plan_and_run(cfg)
            if not layout.feasible or traj.outcome is not Outcome.REACHED:
                print("error: gate delay undefined on an infeasible design "
                      "point", file=sys.stderr)
                return 1
            _emit(_gate_tables(cfg, traj, layout), args.out, "gate.csv")
            return 0

        # dse
        spec = dse.SweepSpec(jx=cfg.drive.jx, jy=cfg.drive.jy,
                             p_max=cfg.planner.p_max)
        results = dse.run_sweep(spec, cfg, workers=max(1, args.workers))
        table = dse.results_to_csv(results)
        summary = dse.best_summary(results, cfg)
        if args.out is None:
            if args.format == "csv":
                sys.stdout.write(table)
            sys.stdout.write(summary)
        else:
            _emit(table, args.out, "dse.csv")
            _emit(summary, args.out, "dse_summary.txt")
            sys.stdout.write(summary)
        return 0 if any(r.feasible for r in results) else 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
