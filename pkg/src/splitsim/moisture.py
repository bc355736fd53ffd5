"""Zone specific-humidity balance.

The zone holds a fixed mass of dry air; ventilation exchanges it with the
outdoors at a balanced mass flow, and the HVAC system injects latent power
(negative when the coil condenses moisture out of the air):

    m_air dw/dt = m_dot (w_in - w) + Q_lat / l_v

Advanced with backward Euler, like the thermal network. Condensation on
zone surfaces is not modelled.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import ConfigurationError, DomainError
from .psychro import LATENT_HEAT_J_PER_KG

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MoistureState:
    """Humidity ratio of the zone air plus the dry-air mass behind it."""

    w_zone: float  # kg/kg
    m_air: float  # kg dry air

    def __post_init__(self):
        if self.w_zone < 0.0:
            raise DomainError(f"zone humidity ratio must be non-negative, got {self.w_zone}")
        if self.m_air <= 0.0:
            raise ConfigurationError(f"zone dry-air mass must be positive, got {self.m_air}")


def step_moisture(state: MoistureState, m_dot_in: float, w_in: float, q_lat_injected: float,
                  l_v: float = LATENT_HEAT_J_PER_KG, dt: float = 60.0) -> MoistureState:
    """One implicit step of the zone moisture balance.

    Args:
        state: zone humidity state at the start of the step.
        m_dot_in: outdoor-air renewal flow, kg/s (outflow is balanced).
        w_in: humidity ratio of the incoming air, kg/kg.
        q_lat_injected: latent power, W; negative extracts moisture.
        l_v: heat of vaporization, J/kg.
        dt: step length, s.

    The humidity ratio is floored at zero (with a warning) when the latent
    extraction would overdraw the zone moisture within the step.
    """
    if dt <= 0.0:
        raise DomainError(f"dt must be positive, got {dt}")
    if m_dot_in < 0.0:
        raise DomainError(f"renewal flow must be non-negative, got {m_dot_in}")

    cap = state.m_air / dt
    w_new = (cap * state.w_zone + m_dot_in * w_in + q_lat_injected / l_v) / (cap + m_dot_in)
    if w_new < 0.0:
        # debug level: long runs clamp on thousands of consecutive steps
        # (constant-SHF units keep extracting from a dry zone); the simulation
        # loop reports one run-level warning instead
        logger.debug(
            "latent extraction of %.0f W would drive zone humidity negative (%.3g); clamped to 0",
            q_lat_injected, w_new,
        )
        w_new = 0.0
    return MoistureState(w_zone=w_new, m_air=state.m_air)


def ideal_zone_latent_load(state: MoistureState, m_dot_in: float, w_in: float, w_set: float,
                           l_v: float = LATENT_HEAT_J_PER_KG, dt: float = 3600.0) -> float:
    """Latent power (W) that lands the zone humidity exactly on w_set after one step.

    Inverse of ``step_moisture``; negative when dehumidifying. Callers that
    model a cooling-only unit clamp positive values to zero.
    """
    if dt <= 0.0:
        raise DomainError(f"dt must be positive, got {dt}")
    return l_v * (state.m_air * (w_set - state.w_zone) / dt - m_dot_in * (w_in - w_set))
