"""Material, geometry and drive parameters of the skyrmion logic device,
and the rigid-texture (Thiele) constants derived from them.

All quantities are SI.  The skyrmion is treated as a rigid circular
texture of radius ``r_sk`` confined to a thin ferromagnetic track with
perpendicular anisotropy; a spin Hall underlayer drives it along the
track (current density ``jx``) and repeater overlayers push it back
toward the centreline (``jy``).

Coordinate frame: the track runs along +x with the nucleation site at the
origin; the track edges sit at y = +/- w_pmafm/2.  The default chirality
(-1) pairs with non-negative ``jx``/``jy`` so the drive moves the
skyrmion toward +x, the gyrotropic deflection is toward +y, and a
repeater kick steers it back toward -y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants used by the force and gyrovector formulas.

    gamma0 is the gyromagnetic ratio in rad s^-1 T^-1.  The free-electron
    value is the type default; the packaged run configuration substitutes
    the calibrated effective value (see calibration module).
    """

    hbar: float = 1.0546e-34      # J s
    e_charge: float = 1.6022e-19  # C
    gamma0: float = 1.76e11       # rad s^-1 T^-1
    mu0: float = 4.0 * math.pi * 1e-7  # T m / A

    def __post_init__(self) -> None:
        for name in ("hbar", "e_charge", "gamma0", "mu0"):
            _require(getattr(self, name) > 0, f"{name} must be positive")


@dataclass(frozen=True)
class MaterialParams:
    """Per-design-point material description of the track stack."""

    ms: float = 1e5            # saturation magnetization, A/m
    ku: float = 8e5            # uniaxial anisotropy, J/m^3
    alpha: float = 0.25        # Gilbert damping
    exchange_a: float = 15e-12  # exchange constant, J/m
    theta_she: float = 0.33    # spin Hall angle
    rho_shm: float = 1.06e-7   # SHM resistivity, ohm m
    rho_rshm: float = 1.06e-7  # repeater SHM resistivity, ohm m
    rho_pmafm: float = 1.7e-7  # track resistivity, ohm m
    p_pfm: float = 1.0         # polarizer spin polarization (stored, unused
                               # by the analytic model)

    def __post_init__(self) -> None:
        _require(self.ms > 0, "ms must be positive")
        _require(self.ku > 0, "ku must be positive")
        _require(0 < self.alpha < 1, "alpha must lie in (0, 1)")
        _require(self.exchange_a > 0, "exchange_a must be positive")
        _require(0 < self.theta_she <= 1, "theta_she must lie in (0, 1]")
        for name in ("rho_shm", "rho_rshm", "rho_pmafm"):
            _require(getattr(self, name) > 0, f"{name} must be positive")
        _require(0 < self.p_pfm <= 1, "p_pfm must lie in (0, 1]")


@dataclass(frozen=True)
class DeviceGeometry:
    """Track, heavy-metal and detector dimensions.

    k_confine is the (negative) edge-confinement spring constant; the
    restoring dynamics are stable only for k_confine < 0 together with
    the negative dissipative constant of a positive-Ms film.
    """

    l_pmafm: float = 200e-9
    w_pmafm: float = 50e-9
    h_pmafm: float = 0.4e-9
    l_shm: float = 200e-9
    w_shm: float = 50e-9
    h_shm: float = 1e-9
    l_rshm: float = 25e-9
    w_rshm: float = 50e-9
    h_rshm: float = 1e-9
    r_sk: float = 8e-9
    k_confine: float = -3.6e-5  # N/m
    l_det: float = 25e-9        # detector footprint defaults to the
    w_det: float = 50e-9        # repeater footprint (see planner notes)
    nucleation_diameter: float = 20e-9

    def __post_init__(self) -> None:
        for name in ("l_pmafm", "w_pmafm", "h_pmafm", "l_shm", "w_shm",
                     "h_shm", "l_rshm", "w_rshm", "h_rshm", "r_sk",
                     "l_det", "w_det", "nucleation_diameter"):
            _require(getattr(self, name) > 0, f"{name} must be positive")
        _require(self.k_confine < 0, "k_confine must be negative")
        _require(2 * self.r_sk < self.w_pmafm,
                 "skyrmion diameter must fit inside the track width")
        _require(self.l_rshm < self.l_pmafm,
                 "repeater must be shorter than the track")
        _require(self.l_det <= self.l_pmafm,
                 "detector cannot be longer than the track")


@dataclass(frozen=True)
class DriveConfig:
    """Current densities and skyrmion chirality.

    jx and jy are magnitudes; the physical current directions are folded
    into the force signs (see module docstring).  j_nuc defaults to the
    density of a 300 uA pulse over the 20 nm nucleation spot; j_c_nuc is
    the critical density above which a skyrmion nucleates.
    """

    jx: float = 9e10
    jy: float = 5e11
    j_nuc: float = 3e-4 / (math.pi * (10e-9) ** 2)  # ~9.549e11 A/m^2
    j_c_nuc: float = 9.5e11
    chirality_q: int = -1

    def __post_init__(self) -> None:
        _require(self.jx >= 0, "jx must be non-negative")
        _require(self.jy >= 0, "jy must be non-negative")
        _require(self.j_nuc >= 0, "j_nuc must be non-negative")
        _require(self.j_c_nuc > 0, "j_c_nuc must be positive")
        _require(self.chirality_q in (1, -1), "chirality_q must be +1 or -1")


@dataclass(frozen=True)
class ThieleConstants:
    """Every derived constant of the rigid-texture equations of motion.

    The drift field is
        dx/dt = a_const * f_she_x + b_const * (f_she_y - k_confine * y)
        dy/dt = -b_const * f_she_x + a_const * (f_she_y - k_confine * y)
    with a_const = alpha*D / (G^2 + (alpha*D)^2) and
    b_const = G / (G^2 + (alpha*D)^2).  tau is the transverse relaxation
    time (G^2 + (alpha*D)^2) / |alpha * D * k|.
    """

    g_gyro: float     # gyrovector z component, N s / m
    d_diss: float     # dissipative tensor diagonal, N s / m
    delta_dw: float   # domain-wall width, m
    tau: float        # relaxation time, s
    a_const: float    # m / (N s)
    b_const: float    # m / (N s)
    f_she_x: float    # longitudinal spin Hall force, N
    f_she_y: float    # transverse (repeater) spin Hall force, N
    k_confine: float  # edge confinement constant, N/m

    def __post_init__(self) -> None:
        _require(self.tau > 0, "tau must be positive")
        _require(self.delta_dw > 0, "delta_dw must be positive")


def domain_wall_width(m: MaterialParams,
                      constants: PhysicalConstants | None = None,
                      demag_corrected: bool = False) -> float:
    """Bloch-wall width sqrt(A / Ku) of the track material, in metres.

    With ``demag_corrected`` the anisotropy is reduced by the thin-film
    shape term 0.5 * mu0 * Ms^2 (a <1% shift for the default material).
    """
    if m.ku <= 0 or m.exchange_a <= 0:
        raise ValueError("domain_wall_width needs positive ku and exchange_a")
    ku_eff = m.ku
    if demag_corrected:
        mu0 = (constants or PhysicalConstants()).mu0
        ku_eff = m.ku - 0.5 * mu0 * m.ms ** 2
        if ku_eff <= 0:
            raise ValueError("demagnetization correction exceeds ku")
    return math.sqrt(m.exchange_a / ku_eff)


def thiele_constants(m: MaterialParams,
                     g: DeviceGeometry,
                     d: DriveConfig,
                     c: PhysicalConstants | None = None,
                     demag_corrected: bool = False) -> ThieleConstants:
    """Derive the rigid-texture constants for one design point.

    Force conventions: f_she_x carries the sign of jx * chirality_q, and
    f_she_y carries the opposite pairing, so that with the default
    chirality (-1) positive jy steers the skyrmion back toward the track
    centreline while its gyrotropic reaction pushes it forward.
    """
    c = c or PhysicalConstants()
    delta = domain_wall_width(m, c, demag_corrected)
    if delta == 0 or g.k_confine == 0:
        raise ZeroDivisionError("degenerate domain-wall width or confinement")

    q = float(d.chirality_q)
    gyro = -4.0 * math.pi * q * m.ms * g.h_pmafm / c.gamma0
    diss = -m.ms * g.h_pmafm * math.pi ** 3 * g.r_sk / (delta * c.gamma0)
    force_scale = c.hbar * m.theta_she * math.pi ** 2 * g.r_sk / (2.0 * c.e_charge)
    f_x = force_scale * d.jx * q
    f_y = -force_scale * d.jy * q

    ad = m.alpha * diss
    denom = gyro * gyro + ad * ad
    a_const = ad / denom
    b_const = gyro / denom
    tau = denom / abs(ad * g.k_confine)
    return ThieleConstants(g_gyro=gyro, d_diss=diss, delta_dw=delta, tau=tau,
                           a_const=a_const, b_const=b_const,
                           f_she_x=f_x, f_she_y=f_y, k_confine=g.k_confine)
