"""Stage delays, stage energies and their energy-delay products.

Total delay is the sum of the nucleation, propagation and detection
stage times; total energy adds the Joule heating of each stage plus the
switching energy of the peripheral transistors.  Propagation Joule
heating from the repeater current accrues only while the skyrmion
resides under a repeater (the transverse drive is gated per event).
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import ReadCircuit
from .device import DeviceGeometry, DriveConfig, MaterialParams
from .trajectory import Outcome, Trajectory


@dataclass(frozen=True)
class EnergyConfig:
    cg: float = 1e-16          # peripheral transistor gate capacitance, F
    vdd: float = 1.0           # logic supply, V
    v_prop: float = 0.25       # drive-transistor gate swing, V
    r_nuc_path: float = 1722.0  # nucleation path resistance, back-solved so a
                               # 300 uA / 20 ps pulse dissipates 3.1 fJ
    t_nuc_fixed: float = 20e-12
    t_det_fixed: float = 25e-12

    def __post_init__(self) -> None:
        for name in ("cg", "vdd", "v_prop", "r_nuc_path",
                     "t_nuc_fixed", "t_det_fixed"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class PerformanceReport:
    """Per-stage delays/energies plus exact sums and products."""

    t_nuc: float
    t_prop: float
    t_det: float
    e_nuc: float
    e_prop: float
    e_det: float
    e_tx: float
    t_total: float
    e_total: float
    edp_total: float
    edp_prop: float
    edp_nuc: float
    edp_det: float
    v_avg: float
    p: int


def propagation_energy(traj: Trajectory, layout, m: MaterialParams,
                       g: DeviceGeometry, drive: DriveConfig,
                       ec: EnergyConfig) -> float:
    """Joule heating of both drives plus (1 + p) drive-transistor switches.

    The jx term heats the full underlayer for the whole propagation; the
    jy term heats one repeater volume only during R2 residency.
    """
    if traj.outcome is not Outcome.REACHED:
        raise ValueError("propagation energy is defined for completed runs "
                         f"(outcome was {traj.outcome.value})")
    vol_shm = g.l_shm * g.w_shm * g.h_shm
    vol_rshm = g.l_rshm * g.w_rshm * g.h_rshm
    e_jx = drive.jx ** 2 * m.rho_shm * vol_shm * traj.t_prop
    e_jy = drive.jy ** 2 * m.rho_rshm * vol_rshm * traj.r2_residency
    e_switch = (1 + layout.p) * ec.cg * ec.v_prop ** 2
    return e_jx + e_jy + e_switch


def nucleation_energy(i_nuc: float, ec: EnergyConfig) -> float:
    """I^2 R Joule heating of the nucleation pulse over t_nuc."""
    if i_nuc < 0:
        raise ValueError("i_nuc must be non-negative")
    return i_nuc ** 2 * ec.r_nuc_path * ec.t_nuc_fixed


def detection_energy(read: ReadCircuit, r_mtj: float, ec: EnergyConfig) -> float:
    """Read-divider dissipation v^2 t / (sum of series resistances)."""
    if r_mtj <= 0:
        raise ValueError("r_mtj must be positive")
    return read.v_read ** 2 * ec.t_det_fixed / (read.r_tx + r_mtj + read.r_shm)


def total_performance(*, t_prop: float, e_prop: float, p: int, i_nuc: float,
                      read: ReadCircuit, r_mtj: float, ec: EnergyConfig,
                      geometry: DeviceGeometry) -> PerformanceReport:
    """Aggregate the stage components into exact sums and products."""
    t_nuc = ec.t_nuc_fixed
    t_det = ec.t_det_fixed
    e_nuc = nucleation_energy(i_nuc, ec)
    e_det = detection_energy(read, r_mtj, ec)
    e_tx = ec.cg * ec.vdd ** 2
    t_total = t_nuc + t_prop + t_det
    e_total = e_nuc + e_prop + e_det + e_tx
    return PerformanceReport(
        t_nuc=t_nuc, t_prop=t_prop, t_det=t_det,
        e_nuc=e_nuc, e_prop=e_prop, e_det=e_det, e_tx=e_tx,
        t_total=t_total, e_total=e_total,
        edp_total=e_total * t_total,
        edp_prop=e_prop * t_prop,
        edp_nuc=e_nuc * t_nuc,
        edp_det=e_det * t_det,
        v_avg=geometry.l_pmafm / t_prop,
        p=p)
