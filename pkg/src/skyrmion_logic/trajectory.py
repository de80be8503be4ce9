"""Closed-form skyrmion trajectories on the segmented track.

The track is a sequence of R1 segments (longitudinal drive only) and R2
segments (longitudinal plus repeater drive).  Within one segment the
equations of motion are linear in y, so the position has an exact
solution: y relaxes exponentially toward a segment steady state y_ss with
time constant tau, and x is the exact time integral of the drift velocity,

    y(t) = y_ss + (y0 - y_ss) * exp(-t / tau)
    x(t) = x0 + v_inf * t - b * k * tau * (y0 - y_ss) * (1 - exp(-t / tau))

with v_inf = a*Fx + b*(Fy - k*y_ss) the asymptotic longitudinal velocity.
``simulate`` stitches the per-segment solutions into a piecewise
trajectory, resetting the local clock at each boundary, and terminates on
reaching the track end, on annihilation at the edge margin, or on a
stalled (non-advancing) segment.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .calibration import ANNIHILATION_MARGIN_SLACK
from .device import DeviceGeometry, ThieleConstants

X_CROSSING_TOL = 1e-13   # m, bisection stop for segment crossings
MAX_BISECTIONS = 200


class StallError(RuntimeError):
    """Raised when x(t) cannot reach the requested crossing."""


class RegionKind(enum.Enum):
    R1 = "R1"
    R2 = "R2"


class Outcome(enum.Enum):
    REACHED = "Reached"
    ANNIHILATED = "Annihilated"
    STALLED = "Stalled"


@dataclass(frozen=True)
class Segment:
    kind: RegionKind
    x_start: float
    x_end: float

    def __post_init__(self) -> None:
        if not self.x_start < self.x_end:
            raise ValueError("segment needs x_start < x_end")


@dataclass(frozen=True)
class SkyrmionState:
    """Skyrmion centre position with segment-local and absolute clocks."""

    x: float
    y: float
    t_local: float = 0.0
    t_global: float = 0.0

    def __post_init__(self) -> None:
        if self.t_local < 0:
            raise ValueError("t_local must be non-negative")
        if self.t_global < self.t_local - 1e-30:
            raise ValueError("t_global cannot precede t_local")


@dataclass(frozen=True)
class _SegmentRecord:
    """One stitched segment: entry state, drive and duration."""

    kind: RegionKind
    t_start: float   # global time at entry
    duration: float
    x0: float
    y0: float
    f_y: float


@dataclass
class Trajectory:
    """Piecewise trajectory with per-sample region annotations."""

    samples: list[SkyrmionState]
    sample_kinds: list[RegionKind]
    segments: list[Segment]
    outcome: Outcome
    t_prop: float
    r2_residency: float
    segment_durations: list[float] = field(default_factory=list)
    records: list[_SegmentRecord] = field(default_factory=list)

    def position_at(self, tc: ThieleConstants, t_global: float) -> tuple[float, float]:
        """Exact closed-form position at an absolute time.

        Only available on trajectories produced by ``simulate`` (the
        numeric oracle keeps no closed-form records).
        """
        if not self.records:
            raise ValueError("trajectory carries no closed-form records")
        if t_global < self.records[0].t_start - 1e-30:
            raise ValueError("time precedes the trajectory start")
        rec = self.records[-1]
        for r in self.records:
            if t_global <= r.t_start + r.duration:
                rec = r
                break
        t_local = min(max(t_global - rec.t_start, 0.0), rec.duration)
        return _evolve(tc, rec.x0, rec.y0, t_local, rec.f_y)

    @property
    def final_state(self) -> SkyrmionState:
        return self.samples[-1]


def _evolve(tc: ThieleConstants, x0: float, y0: float, t: float,
            f_y: float) -> tuple[float, float]:
    """Exact segment solution from (x0, y0) after local time t."""
    if t == 0.0:  # keep the initial condition bit-exact
        return x0, y0
    y_ss = tc.tau * (-tc.b_const * tc.f_she_x + tc.a_const * f_y)
    decay = math.exp(-t / tc.tau)
    y = y_ss + (y0 - y_ss) * decay
    v_inf = tc.a_const * tc.f_she_x + tc.b_const * (f_y - tc.k_confine * y_ss)
    rise = -math.expm1(-t / tc.tau)  # 1 - exp(-t/tau), accurate near t=0
    x = x0 + v_inf * t - tc.b_const * tc.k_confine * tc.tau * (y0 - y_ss) * rise
    return x, y


def steady_state_deflection(tc: ThieleConstants) -> float:
    """R1 transverse steady state y_ss = -tau * b * Fx (signed)."""
    return -tc.tau * tc.b_const * tc.f_she_x


def _segment_force(tc: ThieleConstants, kind: RegionKind) -> float:
    return tc.f_she_y if kind is RegionKind.R2 else 0.0


def position_r1(tc: ThieleConstants, state0: SkyrmionState,
                t: float) -> tuple[float, float]:
    """Position t seconds after entering an R1 segment at state0."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return _evolve(tc, state0.x, state0.y, t, 0.0)


def position_r2(tc: ThieleConstants, state1: SkyrmionState,
                t: float) -> tuple[float, float]:
    """Position t seconds after entering an R2 segment at state1."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return _evolve(tc, state1.x, state1.y, t, tc.f_she_y)


def r2_validity(tc: ThieleConstants, state1: SkyrmionState) -> bool:
    """Whether a repeater kick from state1 is corrective.

    True iff at entry the skyrmion keeps advancing (dx/dt > 0) while
    moving back toward the interior (dy/dt < 0).
    """
    w = tc.f_she_y - tc.k_confine * state1.y
    vx = tc.a_const * tc.f_she_x + tc.b_const * w
    vy = -tc.b_const * tc.f_she_x + tc.a_const * w
    return vx > 0.0 and vy < 0.0


def first_y_crossing(tc: ThieleConstants, y0: float, y_target: float,
                     f_y: float) -> float | None:
    """Local time at which y first reaches y_target, or None if never.

    y relaxes monotonically toward the segment steady state, so the
    crossing exists iff y_target lies strictly between y0 and y_ss.
    """
    y_ss = tc.tau * (-tc.b_const * tc.f_she_x + tc.a_const * f_y)
    num = y_ss - y0
    den = y_ss - y_target
    if num == 0.0 or den == 0.0:  # no motion, or asymptotic target
        return None
    ratio = num / den
    if ratio < 1.0:
        return None
    return tc.tau * math.log(ratio)


def time_to_cross(tc: ThieleConstants, state0: SkyrmionState,
                  kind: RegionKind, x_target: float) -> float:
    """Local time t* at which x(t*) meets x_target, by bracketed bisection.

    Requires x(t) strictly increasing toward the target; a non-advancing
    or receding segment raises StallError (surfaced as a Stalled outcome
    by ``simulate``).  The returned t* satisfies |x(t*) - x_target| below
    the crossing tolerance (1e-13 m).
    """
    f_y = _segment_force(tc, kind)
    x0, y0 = state0.x, state0.y
    if x_target < x0 - X_CROSSING_TOL:
        raise StallError("crossing target lies behind the current position")
    if abs(x_target - x0) <= X_CROSSING_TOL:
        return 0.0

    # v_x(t) is monotone between its entry and asymptotic values, so a
    # positive minimum guarantees strict growth.
    y_ss = tc.tau * (-tc.b_const * tc.f_she_x + tc.a_const * f_y)
    w0 = f_y - tc.k_confine * y0
    vx0 = tc.a_const * tc.f_she_x + tc.b_const * w0
    vx_inf = tc.a_const * tc.f_she_x + tc.b_const * (f_y - tc.k_confine * y_ss)
    if min(vx0, vx_inf) <= 0.0:
        raise StallError("segment velocity is not strictly forward")

    t_hi = tc.tau
    for _ in range(MAX_BISECTIONS):
        if _evolve(tc, x0, y0, t_hi, f_y)[0] >= x_target:
            break
        t_hi *= 2.0
    else:
        raise StallError("could not bracket the crossing")

    t_lo = 0.0
    for _ in range(MAX_BISECTIONS):
        t_mid = 0.5 * (t_lo + t_hi)
        x_mid = _evolve(tc, x0, y0, t_mid, f_y)[0]
        if abs(x_mid - x_target) < X_CROSSING_TOL:
            return t_mid
        if x_mid < x_target:
            t_lo = t_mid
        else:
            t_hi = t_mid
    raise StallError("crossing bisection did not converge")


def build_segments(geometry: DeviceGeometry,
                   intervals: tuple[tuple[float, float], ...] | list) -> list[Segment]:
    """Tile [0, l_pmafm] with R1 gaps around the given R2 intervals."""
    segs: list[Segment] = []
    cursor = 0.0
    for x_start, x_end in intervals:
        if x_start < cursor - 1e-15 or x_end > geometry.l_pmafm + 1e-15:
            raise ValueError("repeater intervals must be sorted, disjoint "
                             "and inside the track")
        if x_start > cursor + 1e-15:
            segs.append(Segment(RegionKind.R1, cursor, x_start))
        segs.append(Segment(RegionKind.R2, x_start, x_end))
        cursor = x_end
    if cursor < geometry.l_pmafm - 1e-15:
        segs.append(Segment(RegionKind.R1, cursor, geometry.l_pmafm))
    return segs


def annihilation_ordinate(geometry: DeviceGeometry,
                          margin_slack: float = ANNIHILATION_MARGIN_SLACK) -> float:
    """|y| at which the skyrmion is destroyed at the track edge."""
    return 0.5 * geometry.w_pmafm - geometry.r_sk + margin_slack


def simulate(tc: ThieleConstants, geometry: DeviceGeometry, layout,
             start: SkyrmionState | None = None, *,
             margin_slack: float = ANNIHILATION_MARGIN_SLACK,
             samples_per_segment: int = 48) -> Trajectory:
    """Stitch the closed-form segment solutions into a full trajectory.

    ``layout`` provides the R2 intervals (a RepeaterLayout or anything
    with an ``intervals`` attribute).  The local clock resets at every
    segment boundary; positions are continuous across boundaries because
    each segment starts from the previous exit state.
    """
    start = start or SkyrmionState(0.0, 0.0)
    segments = build_segments(geometry, layout.intervals)
    y_annih = annihilation_ordinate(geometry, margin_slack)

    samples: list[SkyrmionState] = []
    kinds: list[RegionKind] = []
    records: list[_SegmentRecord] = []
    durations: list[float] = []
    t_global = start.t_global
    t_prop = 0.0
    r2_res = 0.0
    x, y = start.x, start.y
    outcome = Outcome.REACHED

    def emit(seg_kind: RegionKind, f_y: float, x0: float, y0: float,
             t_entry: float, t_end: float) -> None:
        n = max(2, samples_per_segment)
        for i in range(n):
            tl = t_end * i / (n - 1)
            sx, sy = _evolve(tc, x0, y0, tl, f_y)
            samples.append(SkyrmionState(sx, sy, tl, t_entry + tl))
            kinds.append(seg_kind)

    for seg in segments:
        f_y = _segment_force(tc, seg.kind)
        entry = SkyrmionState(x, y, 0.0, t_global)

        if abs(y) >= y_annih:
            outcome = Outcome.ANNIHILATED
            samples.append(entry)
            kinds.append(seg.kind)
            break

        # first edge contact inside this segment, if any
        t_annih = None
        for edge in (y_annih, -y_annih):
            t_edge = first_y_crossing(tc, y, edge, f_y)
            if t_edge is not None and (t_annih is None or t_edge < t_annih):
                t_annih = t_edge

        try:
            t_cross = time_to_cross(tc, entry, seg.kind, seg.x_end)
        except StallError:
            outcome = Outcome.STALLED
            samples.append(entry)
            kinds.append(seg.kind)
            break

        if t_annih is not None and t_annih < t_cross:
            emit(seg.kind, f_y, x, y, t_global, t_annih)
            records.append(_SegmentRecord(seg.kind, t_global, t_annih, x, y, f_y))
            durations.append(t_annih)
            t_prop += t_annih
            if seg.kind is RegionKind.R2:
                r2_res += t_annih
            outcome = Outcome.ANNIHILATED
            break

        emit(seg.kind, f_y, x, y, t_global, t_cross)
        records.append(_SegmentRecord(seg.kind, t_global, t_cross, x, y, f_y))
        durations.append(t_cross)
        x, y = _evolve(tc, x, y, t_cross, f_y)
        t_global += t_cross
        t_prop += t_cross
        if seg.kind is RegionKind.R2:
            r2_res += t_cross

    if not samples:  # zero-length layout edge case
        samples.append(start)
        kinds.append(RegionKind.R1)

    return Trajectory(samples=samples, sample_kinds=kinds, segments=segments,
                      outcome=outcome, t_prop=t_prop, r2_residency=r2_res,
                      segment_durations=durations, records=records)


def trajectory_to_csv(traj: Trajectory) -> str:
    """Render samples as ``t_global,x,y,segment_kind`` rows with a header."""
    lines = ["t_global,x,y,segment_kind"]
    for state, kind in zip(traj.samples, traj.sample_kinds):
        lines.append(f"{state.t_global:.12e},{state.x:.12e},"
                     f"{state.y:.12e},{kind.value}")
    return "\n".join(lines) + "\n"
