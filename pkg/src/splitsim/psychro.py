"""Moist-air property functions.

Conventions used throughout the package:

- temperature in degrees Celsius (converted to Kelvin internally)
- pressure in kPa (standard atmosphere = 101.325 kPa)
- humidity ratio ``w`` in kg of water vapour per kg of dry air
- specific enthalpy in kJ per kg of dry air, zero at 0 degC dry air
- specific volume in m3 per kg of dry air

Saturation pressure uses the ASHRAE Fundamentals correlation (Hyland-Wexler
coefficients), liquid branch at or above 0 degC and ice branch below, valid
for -40..60 degC. Every derived quantity (humidity ratio, enthalpy, specific
volume, wet-bulb relation) follows the ASHRAE ideal-gas formulation. All
functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

P_ATM_KPA = 101.325
"""Default total pressure, sea-level standard atmosphere."""

CP_DRY_AIR_KJ = 1.006  # kJ/(kg K)
CP_VAPOR_KJ = 1.86  # kJ/(kg K)
H_VAPOR_REF_KJ = 2501.0  # latent heat of vaporization at 0 degC, kJ/kg
R_DRY_AIR_KJ = 0.287055  # kJ/(kg K)
MW_RATIO = 0.62198  # molecular weight ratio water vapour / dry air
VAPOR_VOLUME_FACTOR = 1.6078  # R_vapor / R_dry_air, for the ideal-gas volume

CP_MOIST_KJ = 1.02
"""Lumped specific heat of the dry-air/vapour mixture, kJ/(kg K).

Used only by the cooling-coil rating-point correction, which is defined in
terms of this single constant; everywhere else the full enthalpy formula
applies.
"""

LATENT_HEAT_J_PER_KG = 2.45e6
"""Default heat of vaporization for the zone moisture balance, J/kg."""

T_MIN_C = -40.0
T_MAX_C = 60.0

# Hyland-Wexler coefficients, ln(p_ws [Pa]) as a function of T [K].
_LIQUID = (-5.8002206e3, 1.3914993, -4.8640239e-2, 4.1764768e-5, -1.4452093e-8, 6.5459673)
_ICE = (-5.6745359e3, 6.3925247, -9.6778430e-3, 6.2215701e-7, 2.0747825e-9, -9.4840240e-13, 4.1635019)


def saturation_vapor_pressure(t_c: float) -> float:
    """Saturation pressure of water vapour, kPa.

    Args:
        t_c: temperature in degC, -40..60.

    Raises:
        DomainError: if the temperature is outside the correlation range.
    """
    if not T_MIN_C <= t_c <= T_MAX_C:
        raise DomainError(f"temperature {t_c} degC outside supported range [{T_MIN_C}, {T_MAX_C}]")
    t_k = t_c + 273.15
    if t_c >= 0.0:
        c = _LIQUID
        ln_p = c[0] / t_k + c[1] + c[2] * t_k + c[3] * t_k**2 + c[4] * t_k**3 + c[5] * math.log(t_k)
    else:
        c = _ICE
        ln_p = (
            c[0] / t_k
            + c[1]
            + c[2] * t_k
            + c[3] * t_k**2
            + c[4] * t_k**3
            + c[5] * t_k**4
            + c[6] * math.log(t_k)
        )
    return math.exp(ln_p) / 1000.0


def humidity_ratio_from_vapor_pressure(p_v_kpa: float, p_atm_kpa: float = P_ATM_KPA) -> float:
    """w = 0.62198 p_v / (p - p_v)."""
    if p_v_kpa >= p_atm_kpa:
        raise DomainError(f"vapour pressure {p_v_kpa} kPa must be below total pressure {p_atm_kpa} kPa")
    return MW_RATIO * p_v_kpa / (p_atm_kpa - p_v_kpa)


def saturation_humidity_ratio(t_c: float, p_atm_kpa: float = P_ATM_KPA) -> float:
    """Humidity ratio of saturated air at the given temperature and pressure."""
    return humidity_ratio_from_vapor_pressure(saturation_vapor_pressure(t_c), p_atm_kpa)


def humidity_ratio_from_rh(t_db: float, rh: float, p_atm_kpa: float = P_ATM_KPA) -> float:
    """Humidity ratio from dry-bulb temperature and relative humidity.

    Args:
        t_db: dry-bulb temperature, degC.
        rh: relative humidity as a fraction in [0, 1].
        p_atm_kpa: total pressure, kPa.
    """
    if not 0.0 <= rh <= 1.0:
        raise DomainError(f"relative humidity must be within [0, 1], got {rh}")
    return humidity_ratio_from_vapor_pressure(rh * saturation_vapor_pressure(t_db), p_atm_kpa)


def relative_humidity(t_db: float, w: float, p_atm_kpa: float = P_ATM_KPA) -> float:
    """Relative humidity (fraction) from dry-bulb temperature and humidity ratio."""
    if w < 0.0:
        raise DomainError(f"humidity ratio must be non-negative, got {w}")
    p_v = w * p_atm_kpa / (MW_RATIO + w)
    return p_v / saturation_vapor_pressure(t_db)


def humidity_ratio_from_wetbulb(t_db: float, t_wb: float, p_atm_kpa: float = P_ATM_KPA) -> float:
    """Humidity ratio from dry-bulb and thermodynamic wet-bulb temperature.

    ASHRAE psychrometer relation:

        w = ((2501 - 2.326 t_wb) w_s(t_wb) - 1.006 (t_db - t_wb))
            / (2501 + 1.860 t_db - 4.186 t_wb)

    Returns the saturation humidity ratio when ``t_wb == t_db`` (exactly, by
    construction of the relation).

    Raises:
        DomainError: if ``t_wb > t_db``.
    """
    if t_wb > t_db:
        raise DomainError(f"wet-bulb {t_wb} degC cannot exceed dry-bulb {t_db} degC")
    w_s = saturation_humidity_ratio(t_wb, p_atm_kpa)
    num = (2501.0 - 2.326 * t_wb) * w_s - 1.006 * (t_db - t_wb)
    den = 2501.0 + 1.860 * t_db - 4.186 * t_wb
    return num / den


def moist_air_enthalpy(t_db: float, w: float) -> float:
    """Specific enthalpy of moist air, kJ per kg dry air.

    h = 1.006 t + w (2501 + 1.86 t); zero for dry air at 0 degC.
    """
    if w < 0.0:
        raise DomainError(f"humidity ratio must be non-negative, got {w}")
    return CP_DRY_AIR_KJ * t_db + w * (H_VAPOR_REF_KJ + CP_VAPOR_KJ * t_db)


def specific_volume(t_db: float, w: float, p_atm_kpa: float = P_ATM_KPA) -> float:
    """Specific volume of moist air, m3 per kg dry air (ideal gas).

    v = R_da T (1 + 1.6078 w) / p
    """
    if w < 0.0:
        raise DomainError(f"humidity ratio must be non-negative, got {w}")
    if p_atm_kpa <= 0.0:
        raise DomainError(f"pressure must be positive, got {p_atm_kpa}")
    return R_DRY_AIR_KJ * (t_db + 273.15) / p_atm_kpa * (1.0 + VAPOR_VOLUME_FACTOR * w)


_SUPERSATURATION_TOL = 1e-6


@dataclass(frozen=True)
class MoistAirState:
    """Thermodynamic state of the zone (or coil-entering) air.

    Attributes:
        t_db: dry-bulb temperature, degC.
        w: humidity ratio, kg/kg dry air.
        p_atm_kpa: total pressure, kPa.
    """

    t_db: float
    w: float
    p_atm_kpa: float = P_ATM_KPA

    def __post_init__(self):
        if self.p_atm_kpa <= 0.0:
            raise DomainError(f"pressure must be positive, got {self.p_atm_kpa}")
        if self.w < 0.0:
            raise DomainError(f"humidity ratio must be non-negative, got {self.w}")
        w_max = saturation_humidity_ratio(self.t_db, self.p_atm_kpa) + _SUPERSATURATION_TOL
        if self.w > w_max:
            raise DomainError(
                f"humidity ratio {self.w:.6g} exceeds saturation at {self.t_db} degC "
                f"({w_max:.6g} incl. tolerance)"
            )

    @property
    def enthalpy(self) -> float:
        return moist_air_enthalpy(self.t_db, self.w)

    @property
    def volume(self) -> float:
        return specific_volume(self.t_db, self.w, self.p_atm_kpa)

    @property
    def rh(self) -> float:
        return relative_humidity(self.t_db, self.w, self.p_atm_kpa)
