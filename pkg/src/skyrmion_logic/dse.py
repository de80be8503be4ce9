"""Design-space exploration over the track material parameters.

Enumerates the (Ms, Ku, alpha) grid, evaluates every point end to end
(constants -> repeater plan -> trajectory -> propagation energy), filters
infeasible points, and selects the best design for the propagation-only
or combined energy-delay objective.  Point evaluations are pure and
independent, so the sweep may run on any number of worker threads and
must produce identical results for all of them.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import product

from .circuit import mtj_resistance
from .config import RunConfig
from .device import thiele_constants
from .performance import (PerformanceReport, nucleation_energy,
                          propagation_energy, total_performance)
from .planner import InfeasibilityReason, plan
from .trajectory import Outcome, simulate


class Objective(enum.Enum):
    EDP_PROP = "EdpProp"
    EDP_COMBINED = "EdpCombined"


class NoFeasiblePointError(RuntimeError):
    """The sweep produced no feasible design point."""


DEFAULT_MS = (1e5, 3e5, 5e5, 8e5, 10e5)
DEFAULT_KU = (5e5, 8e5, 10e5)
DEFAULT_ALPHA = (0.05, 0.1, 0.15, 0.2, 0.25)


@dataclass(frozen=True)
class SweepSpec:
    ms_values: tuple[float, ...] = DEFAULT_MS
    ku_values: tuple[float, ...] = DEFAULT_KU
    alpha_values: tuple[float, ...] = DEFAULT_ALPHA
    jx: float = 9e10
    jy: float = 5e11
    p_max: int = 2
    objective: Objective = Objective.EDP_PROP

    def __post_init__(self) -> None:
        if not (self.ms_values and self.ku_values and self.alpha_values):
            raise ValueError("sweep axes must be non-empty")


@dataclass(frozen=True)
class DesignPointResult:
    ms: float
    ku: float
    alpha: float
    feasible: bool
    reason: InfeasibilityReason
    p: int
    v_x: float | None = None
    t_prop: float | None = None
    e_prop: float | None = None
    edp_prop: float | None = None
    report: PerformanceReport | None = None

    @property
    def params(self) -> tuple[float, float, float]:
        return (self.ms, self.ku, self.alpha)


def enumerate_grid(spec: SweepSpec) -> list[tuple[float, float, float]]:
    """Full Cartesian product in deterministic lexicographic order."""
    return list(product(sorted(spec.ms_values), sorted(spec.ku_values),
                        sorted(spec.alpha_values)))


def nucleation_current(cfg: RunConfig) -> float:
    """Configured nucleation current: j_nuc over the injection spot."""
    spot = math.pi * (0.5 * cfg.geometry.nucleation_diameter) ** 2
    return cfg.drive.j_nuc * spot


def evaluate_point(triple: tuple[float, float, float], spec: SweepSpec,
                   cfg: RunConfig) -> DesignPointResult:
    """Evaluate one (Ms, Ku, alpha) design point; failures become data."""
    ms, ku, alpha = triple
    material = replace(cfg.material, ms=ms, ku=ku, alpha=alpha)
    drive = replace(cfg.drive, jx=spec.jx, jy=spec.jy)
    tc = thiele_constants(material, cfg.geometry, drive, cfg.constants)
    layout = plan(tc, cfg.geometry, spec.p_max,
                  safety_buffer=cfg.planner.safety_buffer,
                  margin_slack=cfg.planner.margin_slack)
    if not layout.feasible:
        return DesignPointResult(ms=ms, ku=ku, alpha=alpha, feasible=False,
                                 reason=layout.infeasibility_reason, p=layout.p)
    traj = simulate(tc, cfg.geometry, layout,
                    margin_slack=cfg.planner.margin_slack)
    if traj.outcome is not Outcome.REACHED:
        # defensive: the greedy planner guarantees completion by design
        return DesignPointResult(ms=ms, ku=ku, alpha=alpha, feasible=False,
                                 reason=InfeasibilityReason.R2_INVALID,
                                 p=layout.p)
    e_prop = propagation_energy(traj, layout, material, cfg.geometry,
                                drive, cfg.energy)
    report = None
    if spec.objective is Objective.EDP_COMBINED:
        r_mtj = mtj_resistance(cfg.mtj, skyrmion_present=True)
        report = total_performance(t_prop=traj.t_prop, e_prop=e_prop,
                                   p=layout.p, i_nuc=nucleation_current(cfg),
                                   read=cfg.read, r_mtj=r_mtj, ec=cfg.energy,
                                   geometry=cfg.geometry)
    return DesignPointResult(ms=ms, ku=ku, alpha=alpha, feasible=True,
                             reason=InfeasibilityReason.NONE, p=layout.p,
                             v_x=cfg.geometry.l_pmafm / traj.t_prop,
                             t_prop=traj.t_prop, e_prop=e_prop,
                             edp_prop=e_prop * traj.t_prop, report=report)


def run_sweep(spec: SweepSpec, cfg: RunConfig,
              workers: int = 1) -> list[DesignPointResult]:
    """Evaluate the whole grid; output order and values are independent of
    the worker count."""
    triples = enumerate_grid(spec)
    if workers <= 1:
        return [evaluate_point(t, spec, cfg) for t in triples]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: evaluate_point(t, spec, cfg), triples))


def select_best(results: list[DesignPointResult], objective: Objective,
                cfg: RunConfig) -> DesignPointResult:
    """Argmin of the objective over feasible points, ties lexicographic.

    The combined objective adds the nucleation energy-delay product at
    the configured nucleation current (a design-point-independent term
    under this model, recorded for reporting).
    """
    feasible = [r for r in results if r.feasible]
    if not feasible:
        raise NoFeasiblePointError("no feasible design point in the sweep")
    edp_nuc = (nucleation_energy(nucleation_current(cfg), cfg.energy)
               * cfg.energy.t_nuc_fixed)

    def key(r: DesignPointResult):
        score = r.edp_prop
        if objective is Objective.EDP_COMBINED:
            score = r.edp_prop + edp_nuc
        return (score, r.ms, r.ku, r.alpha)

    return min(feasible, key=key)


def results_to_csv(results: list[DesignPointResult]) -> str:
    """Fixed-order CSV table; infeasible rows carry no performance fields."""
    lines = ["ms,ku,alpha,feasible,reason,v_x,t_prop,e_prop,edp_prop,p"]
    for r in results:
        if r.feasible:
            perf = (f"{r.v_x:.9e},{r.t_prop:.9e},"
                    f"{r.e_prop:.9e},{r.edp_prop:.9e}")
        else:
            perf = ",,,"
        lines.append(f"{r.ms:.6g},{r.ku:.6g},{r.alpha:.6g},"
                     f"{str(r.feasible).lower()},{r.reason.value},{perf},{r.p}")
    return "\n".join(lines) + "\n"


def best_summary(results: list[DesignPointResult], cfg: RunConfig) -> str:
    """Two-line best-point summary for both objectives."""
    out = []
    for objective in (Objective.EDP_PROP, Objective.EDP_COMBINED):
        try:
            best = select_best(results, objective, cfg)
        except NoFeasiblePointError:
            out.append(f"{objective.value}: no feasible point")
            continue
        out.append(f"{objective.value}: ms={best.ms:.6g} ku={best.ku:.6g} "
                   f"alpha={best.alpha:.6g} p={best.p} "
                   f"v_x={best.v_x:.6g} m/s edp_prop={best.edp_prop:.6g} J s")
    return "\n".join(out) + "\n"
