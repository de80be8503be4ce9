"""Run configuration: factory defaults and the key-value config format.

The config file is line-oriented ``key = value`` with ``[section]``
headers and ``#`` comments.  Every key maps to one field of one model
dataclass; keys are unique across sections, so a key given before any
section header is resolved by name.  Values are floats (scientific
notation accepted) except the few integer fields.  Unknown keys, bad
numbers and invariant violations raise ConfigError naming the offender.

All values are SI base units; human-readable suffixes appear only in
rendered reports.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, replace

from .calibration import (ANNIHILATION_MARGIN_SLACK, GAMMA0_EFFECTIVE,
                          TRIGGER_SAFETY_BUFFER)
from .circuit import (MtjModel, ReadCircuit, TransistorModel,
                      default_transistor, shm_resistance)
from .device import (DeviceGeometry, DriveConfig, MaterialParams,
                     PhysicalConstants)
from .performance import EnergyConfig


class ConfigError(ValueError):
    """Malformed or invariant-violating run configuration."""


@dataclass(frozen=True)
class PlannerSettings:
    safety_buffer: float = TRIGGER_SAFETY_BUFFER
    margin_slack: float = ANNIHILATION_MARGIN_SLACK
    p_max: int = 2

    def __post_init__(self) -> None:
        if self.p_max < 0:
            raise ValueError("p_max must be non-negative")


@dataclass(frozen=True)
class RunConfig:
    constants: PhysicalConstants
    material: MaterialParams
    geometry: DeviceGeometry
    drive: DriveConfig
    mtj: MtjModel
    read: ReadCircuit
    transistor: TransistorModel
    energy: EnergyConfig
    planner: PlannerSettings


def default_config() -> RunConfig:
    """Factory defaults with the calibrated effective gyromagnetic ratio."""
    material = MaterialParams()
    geometry = DeviceGeometry()
    read = ReadCircuit(r_shm=shm_resistance(material, geometry))
    return RunConfig(
        constants=PhysicalConstants(gamma0=GAMMA0_EFFECTIVE),
        material=material,
        geometry=geometry,
        drive=DriveConfig(),
        mtj=MtjModel(),
        read=read,
        transistor=default_transistor(),
        energy=EnergyConfig(),
        planner=PlannerSettings(),
    )


# section -> key -> (target dataclass attribute on RunConfig, field, caster)
_INT_KEYS = {"chirality_q", "p_max"}

_SCHEMA: dict[str, dict[str, str]] = {
    "constants": {k: k for k in ("hbar", "e_charge", "gamma0", "mu0")},
    "material": {k: k for k in ("ms", "ku", "alpha", "exchange_a",
                                "theta_she", "rho_shm", "rho_rshm",
                                "rho_pmafm", "p_pfm")},
    "geometry": {k: k for k in ("l_pmafm", "w_pmafm", "h_pmafm", "l_shm",
                                "w_shm", "h_shm", "l_rshm", "w_rshm",
                                "h_rshm", "r_sk", "k_confine", "l_det",
                                "w_det", "nucleation_diameter")},
    "drive": {k: k for k in ("jx", "jy", "j_nuc", "j_c_nuc", "chirality_q")},
    "circuit": {k: k for k in ("r_ap", "tmr_percent", "eta", "r_tx",
                               "r_shm", "v_read", "cal_v1", "cal_i1",
                               "cal_v2", "cal_i2")},
    "energy": {k: k for k in ("cg", "vdd", "v_prop", "r_nuc_path",
                              "t_nuc", "t_det")},
    "planner": {k: k for k in ("safety_buffer", "margin_slack", "p_max")},
}

_KEY_TO_SECTION: dict[str, str] = {}
for _sec, _keys in _SCHEMA.items():
    for _k in _keys:
        if _k in _KEY_TO_SECTION:
            raise AssertionError(f"duplicate config key {_k}")
        _KEY_TO_SECTION[_k] = _sec


def _line_of(text: str, key: str) -> int | None:
    for i, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped.startswith(key) and "=" in stripped:
            lhs = stripped.split("=", 1)[0].strip()
            if lhs == key:
                return i
    return None


def parse_config(text: str) -> RunConfig:
    """Merge a config file over the factory defaults and validate it."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",),
                                       interpolation=None)
    try:
        parser.read_string("[_top]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(f"config parse error: {exc}") from None

    # flatten to {section: {key: raw}} resolving top-level keys by name
    staged: dict[str, dict[str, float | int]] = {s: {} for s in _SCHEMA}
    for section in parser.sections():
        for key, raw in parser.items(section):
            target = section
            if section == "_top":
                target = _KEY_TO_SECTION.get(key)
                if target is None:
                    raise ConfigError(_err(text, key, "unknown key"))
            elif section not in _SCHEMA:
                raise ConfigError(f"unknown section [{section}]")
            elif key not in _SCHEMA[section]:
                raise ConfigError(_err(text, key, f"unknown key in [{section}]"))
            try:
                value = int(raw) if key in _INT_KEYS else float(raw)
            except ValueError:
                raise ConfigError(_err(text, key, f"malformed number {raw!r}")) from None
            staged[target][key] = value

    cfg = default_config()
    try:
        return _apply(cfg, staged)
    except ValueError as exc:
        raise ConfigError(f"invariant violation: {exc}") from None


def _err(text: str, key: str, what: str) -> str:
    line = _line_of(text, key)
    where = f"line {line}, " if line else ""
    return f"config error ({where}key {key!r}): {what}"


def _apply(cfg: RunConfig, staged: dict[str, dict]) -> RunConfig:
    constants = replace(cfg.constants, **staged["constants"])
    material = replace(cfg.material, **staged["material"])
    geometry = replace(cfg.geometry, **staged["geometry"])
    drive = replace(cfg.drive, **staged["drive"])

    circ = staged["circuit"]
    mtj = replace(cfg.mtj, **{k: circ[k] for k in ("r_ap", "tmr_percent", "eta")
                              if k in circ})
    # r_shm tracks the material/geometry unless explicitly pinned
    r_shm = circ.get("r_shm", shm_resistance(material, geometry))
    read = ReadCircuit(r_tx=circ.get("r_tx", cfg.read.r_tx),
                       r_shm=r_shm,
                       v_read=circ.get("v_read", cfg.read.v_read))
    p1, p2 = cfg.transistor.cal_points
    p1 = (circ.get("cal_v1", p1[0]), circ.get("cal_i1", p1[1]))
    p2 = (circ.get("cal_v2", p2[0]), circ.get("cal_i2", p2[1]))
    transistor = TransistorModel.from_calibration(p1, p2)

    en = staged["energy"]
    energy = EnergyConfig(cg=en.get("cg", cfg.energy.cg),
                          vdd=en.get("vdd", cfg.energy.vdd),
                          v_prop=en.get("v_prop", cfg.energy.v_prop),
                          r_nuc_path=en.get("r_nuc_path", cfg.energy.r_nuc_path),
                          t_nuc_fixed=en.get("t_nuc", cfg.energy.t_nuc_fixed),
                          t_det_fixed=en.get("t_det", cfg.energy.t_det_fixed))
    planner = replace(cfg.planner, **staged["planner"])
    return RunConfig(constants=constants, material=material, geometry=geometry,
                     drive=drive, mtj=mtj, read=read, transistor=transistor,
                     energy=energy, planner=planner)


def load_config(path: str | None) -> RunConfig:
    """Read a config file (or return defaults when path is None)."""
    if path is None:
        return default_config()
    with io.open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
