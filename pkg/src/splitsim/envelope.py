"""R2C nodal thermal network of a single conditioned zone.

Each wall is reduced to one conductance between two capacitive surface
nodes ("R2C": no internal wall nodes). The zone model couples, per wall j
of area A_j:

    inside surface:   A C_si dT_si/dt = A h_ci (T_ai - T_si) + A h_ri (T_rm - T_si)
                                        + A K (T_se - T_si) + sol_int
    outside surface:  A C_se dT_se/dt = A (h_ce + h_re) (T_ae - T_se)
                                        + A K (T_si - T_se) + sol_ext
    zone air:         C_ai dT_ai/dt   = sum_j A_j h_ci (T_si_j - T_ai)
                                        + m_dot cp (T_ae - T_ai) + Q_sens
    radiant node:     0  =  sum_j A_j h_ri (T_si_j - T_rm)

Exterior long-wave exchange is linearized against the outdoor air
temperature (no separate sky node). Solar input is prescribed through
per-wall aperture coefficients applied to global horizontal irradiance:
absorbed exterior flux = aperture_ext * G * area [W], interior shortwave
reaching the surface = aperture_int * G [W].

Time integration is backward (implicit) Euler: all flux terms are taken at
the new time level, so the step is unconditionally stable for any dt. The
whole system is linear; one step = one dense solve over
(t_si_1..n, t_se_1..n, t_ai, t_rm).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError

VENT_CP_J = 1006.0  # specific heat of the renewal air stream, J/(kg K)


@dataclass(frozen=True)
class WallSurface:
    """One opaque wall (or roof/floor) of the R2C network.

    Conductance and capacitances are per square metre of wall;
    ``area`` scales them to the whole surface.
    """

    area: float  # m2
    k_cond: float  # W/(m2 K), surface-to-surface conductance
    c_si: float  # J/(m2 K), inside surface capacitance
    c_se: float  # J/(m2 K), outside surface capacitance
    h_ci: float  # W/(m2 K), inside convective coefficient
    h_ce: float  # W/(m2 K), outside convective coefficient
    h_ri: float  # W/(m2 K), linearized inside radiative coefficient
    h_re: float  # W/(m2 K), linearized outside radiative coefficient
    solar_aperture_ext: float = 0.0  # absorbed exterior solar = a_ext * G * area [W]
    solar_aperture_int: float = 0.0  # interior shortwave on the surface = a_int * G [W]
    name: str = ""

    def __post_init__(self):
        if self.area <= 0.0:
            raise ConfigurationError(f"wall {self.name!r}: area must be positive, got {self.area}")
        if self.k_cond <= 0.0:
            raise ConfigurationError(f"wall {self.name!r}: conductance must be positive, got {self.k_cond}")
        for label in ("c_si", "c_se", "h_ci", "h_ce", "h_ri", "h_re"):
            if getattr(self, label) < 0.0:
                raise ConfigurationError(f"wall {self.name!r}: {label} must be non-negative")


@dataclass(frozen=True)
class ZoneConfig:
    """Thermal description of the conditioned zone."""

    air_capacity: float  # J/K, effective capacitance lumped at the air node
    walls: tuple[WallSurface, ...]
    volume: float  # m3
    air_renewal_flow: float = 0.0  # kg/s of outdoor air (balanced in/out)

    def __post_init__(self):
        if self.air_capacity <= 0.0:
            raise ConfigurationError(f"air_capacity must be positive, got {self.air_capacity}")
        if self.volume <= 0.0:
            raise ConfigurationError(f"volume must be positive, got {self.volume}")
        if self.air_renewal_flow < 0.0:
            raise ConfigurationError(f"air_renewal_flow must be non-negative, got {self.air_renewal_flow}")
        if not self.walls:
            raise ConfigurationError("zone needs at least one wall")
        object.__setattr__(self, "walls", tuple(self.walls))


@dataclass(frozen=True)
class BoundarySample:
    """Outdoor driver for one time step."""

    t_ae: float  # degC
    g_horiz: float = 0.0  # W/m2 global horizontal irradiance

    def __post_init__(self):
        if not (math.isfinite(self.t_ae) and math.isfinite(self.g_horiz)):
            raise ConfigurationError("boundary sample must be finite")
        if self.g_horiz < 0.0:
            raise ConfigurationError(f"irradiance must be non-negative, got {self.g_horiz}")


@dataclass
class EnvelopeState:
    """Node temperatures of the network, degC."""

    t_si: np.ndarray  # per wall
    t_se: np.ndarray  # per wall
    t_ai: float
    t_rm: float

    @classmethod
    def uniform(cls, cfg: ZoneConfig, t: float) -> "EnvelopeState":
        n = len(cfg.walls)
        return cls(t_si=np.full(n, float(t)), t_se=np.full(n, float(t)), t_ai=float(t), t_rm=float(t))


def radiant_mean(cfg: ZoneConfig, t_si: np.ndarray) -> float:
    """h_ri*A weighted mean of the inside surface temperatures.

    Falls back to the plain area-weighted mean when no surface exchanges
    long-wave radiation (keeps the radiant node defined).
    """
    w = np.array([wall.h_ri * wall.area for wall in cfg.walls])
    if w.sum() == 0.0:
        w = np.array([wall.area for wall in cfg.walls])
    return float(w @ t_si / w.sum())


def _assemble(cfg: ZoneConfig, prev: EnvelopeState | None, bc: BoundarySample,
              q_sens_injected: float, inv_dt: float) -> tuple[np.ndarray, np.ndarray]:
    """Build the linear system A x = b over (t_si.., t_se.., t_ai, t_rm).

    ``inv_dt = 0`` drops the capacitive terms (steady-state system), in which
    case ``prev`` is ignored.
    """
    n = len(cfg.walls)
    size = 2 * n + 2
    i_ai = 2 * n
    i_rm = 2 * n + 1
    a = np.zeros((size, size))
    b = np.zeros(size)

    for j, wall in enumerate(cfg.walls):
        area = wall.area
        i_si = j
        i_se = n + j

        # inside surface balance
        a[i_si, i_si] = area * (wall.c_si * inv_dt + wall.h_ci + wall.h_ri + wall.k_cond)
        a[i_si, i_se] = -area * wall.k_cond
        a[i_si, i_ai] = -area * wall.h_ci
        a[i_si, i_rm] = -area * wall.h_ri
        b[i_si] = wall.solar_aperture_int * bc.g_horiz
        if inv_dt:
            b[i_si] += area * wall.c_si * inv_dt * prev.t_si[j]

        # outside surface balance
        h_ext = wall.h_ce + wall.h_re
        a[i_se, i_se] = area * (wall.c_se * inv_dt + h_ext + wall.k_cond)
        a[i_se, i_si] = -area * wall.k_cond
        b[i_se] = area * h_ext * bc.t_ae + wall.solar_aperture_ext * bc.g_horiz * area
        if inv_dt:
            b[i_se] += area * wall.c_se * inv_dt * prev.t_se[j]

        # couplings into the air and radiant rows
        a[i_ai, i_si] = -area * wall.h_ci
        a[i_rm, i_si] = area * wall.h_ri

    vent = cfg.air_renewal_flow * VENT_CP_J
    a[i_ai, i_ai] = cfg.air_capacity * inv_dt + sum(w.area * w.h_ci for w in cfg.walls) + vent
    b[i_ai] = vent * bc.t_ae + q_sens_injected
    if inv_dt:
        b[i_ai] += cfg.air_capacity * inv_dt * prev.t_ai

    rad_sum = sum(w.area * w.h_ri for w in cfg.walls)
    if rad_sum == 0.0:
        # no long-wave coupling: pin the radiant node to the area-weighted mean
        for j, wall in enumerate(cfg.walls):
            a[i_rm, j] = wall.area
        rad_sum = sum(w.area for w in cfg.walls)
    a[i_rm, i_rm] = -rad_sum

    return a, b


def _solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    try:
        x = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise ConfigurationError(f"thermal network system is singular: {exc}") from exc
    if not np.all(np.isfinite(x)):
        raise ConfigurationError("thermal network solve produced non-finite temperatures")
    return x


def _state_from_solution(cfg: ZoneConfig, x: np.ndarray) -> EnvelopeState:
    n = len(cfg.walls)
    return EnvelopeState(t_si=x[:n].copy(), t_se=x[n:2 * n].copy(), t_ai=float(x[2 * n]), t_rm=float(x[2 * n + 1]))


def assemble_thermal_system(cfg: ZoneConfig, prev: EnvelopeState, bc: BoundarySample,
                            q_sens_injected: float, dt: float) -> tuple[np.ndarray, np.ndarray]:
    """Assemble the implicit-Euler system for one time step of length dt seconds."""
    if dt <= 0.0:
        raise ConfigurationError(f"dt must be positive, got {dt}")
    return _assemble(cfg, prev, bc, q_sens_injected, 1.0 / dt)


def step_thermal(cfg: ZoneConfig, prev: EnvelopeState, bc: BoundarySample,
                 q_sens_injected: float, dt: float) -> EnvelopeState:
    """Advance the network one implicit step; returns the new node temperatures."""
    a, b = assemble_thermal_system(cfg, prev, bc, q_sens_injected, dt)
    return _state_from_solution(cfg, _solve(a, b))


def steady_state(cfg: ZoneConfig, bc: BoundarySample, q_sens_injected: float = 0.0) -> EnvelopeState:
    """Zero-capacitance (dt -> infinity) solution of the network.

    Raises:
        ConfigurationError: when nothing connects the zone to the outdoor
            boundary (no exterior film coefficient and no air renewal).
    """
    if cfg.air_renewal_flow == 0.0 and all(w.h_ce + w.h_re == 0.0 for w in cfg.walls):
        raise ConfigurationError("network is disconnected from the outdoor boundary")
    a, b = _assemble(cfg, None, bc, q_sens_injected, 0.0)
    return _state_from_solution(cfg, _solve(a, b))


def ideal_zone_sensible_load(cfg: ZoneConfig, prev: EnvelopeState, bc: BoundarySample,
                             t_set: float, dt: float) -> float:
    """Sensible power (W) that lands the zone air exactly on t_set after one step.

    Re-solves the step system with t_ai prescribed and the injected power as
    the unknown; negative in cooling. Feeding the result back through
    ``step_thermal`` reproduces t_set to solver precision.
    """
    if dt <= 0.0:
        raise ConfigurationError(f"dt must be positive, got {dt}")
    a, b = _assemble(cfg, prev, bc, 0.0, 1.0 / dt)
    n = len(cfg.walls)
    i_ai = 2 * n
    b = b - a[:, i_ai] * t_set
    a = a.copy()
    a[:, i_ai] = 0.0
    a[i_ai, i_ai] = -1.0  # unknown becomes the injected power in the air row
    x = _solve(a, b)
    return float(x[i_ai])
