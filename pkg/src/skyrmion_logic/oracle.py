"""Fixed-step RK4 integration of the drift velocity field.

This is a deliberately independent code path from the closed forms in
``trajectory``: it integrates

    dx/dt = a * Fx + b * (Fy - k * y)
    dy/dt = -b * Fx + a * (Fy - k * y)

with classical fourth-order Runge-Kutta at a fixed step, detecting
segment boundaries and edge annihilation itself.  When a step crosses a
boundary the step fraction is refined by bisection so the force switch
lands on the boundary to floating-point accuracy; segment forces are
constant within every integrated step, preserving the RK4 order.
"""

from __future__ import annotations

from .calibration import ANNIHILATION_MARGIN_SLACK
from .device import DeviceGeometry, ThieleConstants
from .trajectory import (Outcome, RegionKind, SkyrmionState, Trajectory,
                         annihilation_ordinate, build_segments)

_EVENT_REFINE_ITERS = 80


def _rk4_step(a: float, b: float, fx: float, w0: float, k: float,
              x: float, y: float, h: float) -> tuple[float, float]:
    """One RK4 step of size h; w0 = Fy (constant within the segment)."""
    def rhs(yy: float) -> tuple[float, float]:
        w = w0 - k * yy
        return a * fx + b * w, -b * fx + a * w

    k1x, k1y = rhs(y)
    k2x, k2y = rhs(y + 0.5 * h * k1y)
    k3x, k3y = rhs(y + 0.5 * h * k2y)
    k4x, k4y = rhs(y + h * k3y)
    return (x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
            y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y))


def numeric_oracle(tc: ThieleConstants, geometry: DeviceGeometry, layout,
                   start: SkyrmionState | None = None, dt: float = 1e-14, *,
                   margin_slack: float = ANNIHILATION_MARGIN_SLACK,
                   sample_every: int = 1000,
                   max_steps: int = 50_000_000) -> Trajectory:
    """Integrate the same segment schedule as ``simulate`` numerically.

    Returns a Trajectory whose samples are taken every ``sample_every``
    steps plus at every boundary event; it carries no closed-form records.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    start = start or SkyrmionState(0.0, 0.0)
    segments = build_segments(geometry, layout.intervals)
    y_annih = annihilation_ordinate(geometry, margin_slack)

    a, b, k = tc.a_const, tc.b_const, tc.k_confine
    fx = tc.f_she_x

    samples: list[SkyrmionState] = []
    kinds: list[RegionKind] = []
    durations: list[float] = []
    t_global = start.t_global
    t_prop = 0.0
    r2_res = 0.0
    x, y = start.x, start.y
    outcome = Outcome.REACHED
    steps_taken = 0

    def record(seg_kind: RegionKind, t_local: float) -> None:
        samples.append(SkyrmionState(x, y, t_local, t_global))
        kinds.append(seg_kind)

    for seg in segments:
        fy = tc.f_she_y if seg.kind is RegionKind.R2 else 0.0
        t_local = 0.0
        record(seg.kind, t_local)
        if abs(y) >= y_annih:
            outcome = Outcome.ANNIHILATED
            break

        segment_done = False
        while not segment_done:
            steps_taken += 1
            if steps_taken > max_steps:
                outcome = Outcome.STALLED
                segment_done = True
                break
            x_new, y_new = _rk4_step(a, b, fx, fy, k, x, y, dt)
            crossed = x_new >= seg.x_end
            killed = abs(y_new) >= y_annih
            if crossed or killed:
                # Refine the in-step event location by bisecting the
                # partial-step size; the force is unchanged inside the step.
                lo, hi = 0.0, dt
                for _ in range(_EVENT_REFINE_ITERS):
                    mid = 0.5 * (lo + hi)
                    xm, ym = _rk4_step(a, b, fx, fy, k, x, y, mid)
                    if (xm >= seg.x_end) or (abs(ym) >= y_annih):
                        hi = mid
                    else:
                        lo = mid
                h = hi
                x, y = _rk4_step(a, b, fx, fy, k, x, y, h)
                t_local += h
                t_global += h
                if abs(y) >= y_annih and not x >= seg.x_end:
                    outcome = Outcome.ANNIHILATED
                segment_done = True
            else:
                x, y = x_new, y_new
                t_local += dt
                t_global += dt
                if steps_taken % sample_every == 0:
                    record(seg.kind, t_local)

        durations.append(t_local)
        t_prop += t_local
        if seg.kind is RegionKind.R2:
            r2_res += t_local
        record(seg.kind, t_local)
        if outcome is not Outcome.REACHED:
            break

    return Trajectory(samples=samples, sample_kinds=kinds, segments=segments,
                      outcome=outcome, t_prop=t_prop, r2_residency=r2_res,
                      segment_durations=durations, records=[])
