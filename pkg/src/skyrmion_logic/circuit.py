"""MTJ readout, next-stage nucleation decision and gate logic.

Skyrmion presence at the output end lowers the MTJ stack resistance; the
read divider (read transistor / MTJ / heavy-metal underlayer) converts
that into an output voltage which sets the next stage's input-transistor
current.  Only the skyrmion-absent current is strong enough to nucleate,
so one detection stage acts as an inverter.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

from .device import DeviceGeometry, MaterialParams


class ExtrapolationWarning(UserWarning):
    """Output voltage lies outside the transistor calibration range."""


@dataclass(frozen=True)
class MtjModel:
    r_ap: float = 4000.0       # antiparallel resistance, ohm
    tmr_percent: float = 300.0
    eta: float = 0.5           # skyrmion / detector area ratio, < 1

    def __post_init__(self) -> None:
        if self.r_ap <= 0 or self.tmr_percent <= 0:
            raise ValueError("r_ap and tmr_percent must be positive")
        if not 0 < self.eta < 1:
            raise ValueError("eta must lie in (0, 1)")

    @property
    def r_p(self) -> float:
        return self.r_ap / (1.0 + self.tmr_percent / 100.0)


@dataclass(frozen=True)
class ReadCircuit:
    r_tx: float = 3620.0   # read-transistor on-resistance, back-solved so the
                           # divider hits 0.550 V at 4 kohm; config-overridable
    r_shm: float = 424.0   # series underlayer resistance
    v_read: float = 1.0    # read supply magnitude

    def __post_init__(self) -> None:
        for name in ("r_tx", "r_shm", "v_read"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class TransistorModel:
    """Affine V->I model through two measured operating points."""

    i_slope: float
    i_offset: float
    cal_points: tuple[tuple[float, float], tuple[float, float]]

    def __post_init__(self) -> None:
        if self.i_slope <= 0:
            raise ValueError("i_slope must be positive")

    @classmethod
    def from_calibration(cls, p1: tuple[float, float],
                         p2: tuple[float, float]) -> "TransistorModel":
        (v1, i1), (v2, i2) = p1, p2
        if v1 == v2:
            raise ValueError("calibration voltages must differ")
        slope = (i1 - i2) / (v1 - v2)
        return cls(i_slope=slope, i_offset=i1 - slope * v1,
                   cal_points=(p1, p2))


def default_transistor() -> TransistorModel:
    return TransistorModel.from_calibration((0.550, 300e-6), (0.447, 184e-6))


class GateKind(enum.Enum):
    INVERTER = "Inverter"
    NOR2 = "Nor2"


_ARITY = {GateKind.INVERTER: 1, GateKind.NOR2: 2}


@dataclass
class GateState:
    inputs: tuple[bool, ...]
    gate_kind: GateKind
    output: bool | None = field(default=None)

    def __post_init__(self) -> None:
        if len(self.inputs) != _ARITY[self.gate_kind]:
            raise ValueError(f"{self.gate_kind.value} takes "
                             f"{_ARITY[self.gate_kind]} input(s)")


def mtj_resistance(mtj: MtjModel, skyrmion_present: bool) -> float:
    """Stack resistance: r_ap when absent, eta-weighted mix when present."""
    if not skyrmion_present:
        return mtj.r_ap
    return mtj.eta * mtj.r_ap + (1.0 - mtj.eta) * mtj.r_p


def shm_resistance(m: MaterialParams, g: DeviceGeometry,
                   repeater: bool = False) -> float:
    """rho * l / (w * h) of the (repeater) heavy-metal layer."""
    if repeater:
        return m.rho_rshm * g.l_rshm / (g.w_rshm * g.h_rshm)
    return m.rho_shm * g.l_shm / (g.w_shm * g.h_shm)


def output_voltage(read: ReadCircuit, r_mtj: float) -> float:
    """Divider voltage across the MTJ + underlayer branch."""
    if r_mtj <= 0:
        raise ValueError("r_mtj must be positive")
    return read.v_read * (r_mtj + read.r_shm) / (read.r_tx + r_mtj + read.r_shm)


def next_stage_current(tx: TransistorModel, v_out: float) -> float:
    """Next-stage input-transistor on current for a given output voltage.

    Warns (ExtrapolationWarning) when v_out falls outside the calibration
    range widened by 50%.
    """
    voltages = [v for v, _ in tx.cal_points]
    lo, hi = 0.5 * min(voltages), 1.5 * max(voltages)
    if not lo <= v_out <= hi:
        warnings.warn(f"v_out={v_out:.3f} V extrapolates beyond the "
                      f"[{lo:.3f}, {hi:.3f}] V calibration window",
                      ExtrapolationWarning, stacklevel=2)
    return tx.i_slope * v_out + tx.i_offset


def nucleation_current_density(i_on: float, g: DeviceGeometry) -> float:
    """Current density of i_on focused on the nucleation spot."""
    area = math.pi * (0.5 * g.nucleation_diameter) ** 2
    return i_on / area


def nucleation_decision(i_on: float, g: DeviceGeometry,
                        j_c_nuc: float) -> bool:
    """True when i_on over the nucleation spot meets the critical density."""
    if i_on <= 0:
        return False
    return nucleation_current_density(i_on, g) >= j_c_nuc


def evaluate_gate(state: GateState) -> bool:
    """Detection inverts presence: Inverter = NOT in, Nor2 = NOT (a OR b)."""
    if state.gate_kind is GateKind.INVERTER:
        return not state.inputs[0]
    return not (state.inputs[0] or state.inputs[1])


def cascade(stage_output_present: bool, mtj: MtjModel, read: ReadCircuit,
            tx: TransistorModel, geometry: DeviceGeometry,
            j_c_nuc: float) -> bool:
    """Whether the next stage nucleates, given this stage's output state.

    Composition mtj_resistance -> output_voltage -> next_stage_current ->
    nucleation_decision; equals the inverter truth table by construction
    of the calibrated operating points.
    """
    r = mtj_resistance(mtj, stage_output_present)
    v = output_voltage(read, r)
    i = next_stage_current(tx, v)
    return nucleation_decision(i, geometry, j_c_nuc)
