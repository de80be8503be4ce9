"""Greedy placement of repeater (R-SHM) segments along the track.

A repeater is placed exactly where the rising transverse deflection
crosses the trigger ordinate, i.e. just in time to stop the skyrmion
from drifting into the annihilation margin.  A layout is infeasible when
it would need more repeaters than allowed, when a repeater would overlap
the detector footprint at the output end, or when the repeater drive
fails to steer the skyrmion forward and back toward the interior.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .calibration import ANNIHILATION_MARGIN_SLACK, TRIGGER_SAFETY_BUFFER
from .device import DeviceGeometry, ThieleConstants
from .trajectory import (RegionKind, SkyrmionState, annihilation_ordinate,
                         _evolve, first_y_crossing, r2_validity,
                         steady_state_deflection, time_to_cross, StallError)


class InfeasibilityReason(enum.Enum):
    NONE = "None"
    TOO_MANY_REPEATERS = "TooManyRepeaters"
    DETECTOR_OVERLAP = "DetectorOverlap"
    R2_INVALID = "R2Invalid"


@dataclass(frozen=True)
class RepeaterLayout:
    """Repeater count and x-intervals; infeasibility is data, not an error."""

    p: int
    intervals: tuple[tuple[float, float], ...]
    feasible: bool
    infeasibility_reason: InfeasibilityReason = InfeasibilityReason.NONE

    def __post_init__(self) -> None:
        if self.p != len(self.intervals):
            raise ValueError("p must equal the number of intervals")
        last_end = -1.0
        for x_start, x_end in self.intervals:
            if not x_start < x_end:
                raise ValueError("intervals need x_start < x_end")
            if x_start < last_end:
                raise ValueError("intervals must be sorted and disjoint")
            last_end = x_end
        if self.feasible and self.infeasibility_reason is not InfeasibilityReason.NONE:
            raise ValueError("feasible layouts carry reason None")
        if not self.feasible and self.infeasibility_reason is InfeasibilityReason.NONE:
            raise ValueError("infeasible layouts need a reason")


def trigger_ordinate(geometry: DeviceGeometry,
                     safety_buffer: float = TRIGGER_SAFETY_BUFFER) -> float:
    """y at which the planner starts a repeater: w/2 - r_sk - buffer."""
    y = 0.5 * geometry.w_pmafm - geometry.r_sk - safety_buffer
    if y <= 0:
        raise ValueError("track too narrow for the requested trigger buffer")
    return y


def plan(tc: ThieleConstants, geometry: DeviceGeometry, p_max: int = 2, *,
         safety_buffer: float = TRIGGER_SAFETY_BUFFER,
         margin_slack: float = ANNIHILATION_MARGIN_SLACK) -> RepeaterLayout:
    """Greedy forward construction of the repeater layout.

    Simulates the drift in closed form from the nucleation site; each time
    the deflection reaches the trigger ordinate before the output, an R2
    interval of length l_rshm is placed at the crossing abscissa and the
    walk resumes from the repeater exit state.
    """
    if p_max < 0:
        raise ValueError("p_max must be non-negative")
    y_trig = trigger_ordinate(geometry, safety_buffer)
    y_annih = annihilation_ordinate(geometry, margin_slack)
    if y_trig >= y_annih:
        raise ValueError("trigger ordinate must sit below the annihilation "
                         "threshold")

    detector_start = geometry.l_pmafm - geometry.l_det
    intervals: list[tuple[float, float]] = []
    x, y = 0.0, 0.0

    def infeasible(reason: InfeasibilityReason) -> RepeaterLayout:
        return RepeaterLayout(p=len(intervals), intervals=tuple(intervals),
                              feasible=False, infeasibility_reason=reason)

    while True:
        # R1 leg: does the trigger fire before the output?
        t_trig = 0.0 if y >= y_trig else first_y_crossing(tc, y, y_trig, 0.0)
        if t_trig is None:
            # deflection saturates below the trigger: free run to the output
            return RepeaterLayout(p=len(intervals), intervals=tuple(intervals),
                                  feasible=True)
        x_trig, _ = _evolve(tc, x, y, t_trig, 0.0)
        if x_trig >= geometry.l_pmafm:
            return RepeaterLayout(p=len(intervals), intervals=tuple(intervals),
                                  feasible=True)

        if len(intervals) + 1 > p_max:
            return infeasible(InfeasibilityReason.TOO_MANY_REPEATERS)
        x_end = x_trig + geometry.l_rshm
        if x_end > detector_start:
            return infeasible(InfeasibilityReason.DETECTOR_OVERLAP)

        # infeasible layouts keep the attempted placement for reporting
        intervals.append((x_trig, x_end))
        entry = SkyrmionState(x_trig, y_trig)
        if not r2_validity(tc, entry):
            return infeasible(InfeasibilityReason.R2_INVALID)

        # R2 leg: cross the repeater, guarding the far edge
        try:
            t_r2 = time_to_cross(tc, entry, RegionKind.R2, x_end)
        except StallError:
            return infeasible(InfeasibilityReason.R2_INVALID)
        t_far = first_y_crossing(tc, y_trig, -y_annih, tc.f_she_y)
        if t_far is not None and t_far < t_r2:
            return infeasible(InfeasibilityReason.R2_INVALID)
        x, y = _evolve(tc, x_trig, y_trig, t_r2, tc.f_she_y)


def plan_equal_spacing(geometry: DeviceGeometry, p: int) -> RepeaterLayout:
    """Comparison mode: p repeaters centred at fractions i/(p+1) of the track.

    Only geometric feasibility is checked here; run the layout through
    ``simulate`` to see whether the skyrmion survives it.
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    intervals = []
    half = 0.5 * geometry.l_rshm
    detector_start = geometry.l_pmafm - geometry.l_det
    feasible = True
    for i in range(1, p + 1):
        centre = geometry.l_pmafm * i / (p + 1)
        lo, hi = centre - half, centre + half
        if lo < 0 or hi > detector_start:
            feasible = False
        intervals.append((lo, hi))
    for (a0, a1), (b0, b1) in zip(intervals, intervals[1:]):
        if a1 > b0:
            feasible = False
    if feasible:
        return RepeaterLayout(p=p, intervals=tuple(intervals), feasible=True)
    return RepeaterLayout(p=p, intervals=tuple(intervals), feasible=False,
                          infeasibility_reason=InfeasibilityReason.DETECTOR_OVERLAP)


def steady_deflection_summary(tc: ThieleConstants,
                              geometry: DeviceGeometry, *,
                              safety_buffer: float = TRIGGER_SAFETY_BUFFER,
                              margin_slack: float = ANNIHILATION_MARGIN_SLACK) -> dict:
    """Small diagnostic bundle used by reports."""
    return {
        "steady_state_deflection": steady_state_deflection(tc),
        "trigger_ordinate": trigger_ordinate(geometry, safety_buffer),
        "annihilation_ordinate": annihilation_ordinate(geometry, margin_slack),
    }
