"""splitsim: zone thermal / split-system heat-pump co-simulation.

Couples an R2C nodal envelope and a zone moisture balance to three
air-conditioner models of increasing detail (ideal loads, constant-capacity
on/off cycling, manufacturer-data coil model), with a CLI for running,
aggregating and comparing simulations.
"""

from .coil import (
    CoilPerformanceTable,
    CoilPoint,
    CoilRegression,
    bypass_corrected_sensible,
    capacities_at_reference,
    fit_capacity_regression,
    load_coil_table_csv,
    split_capacities,
)
from .envelope import (
    BoundarySample,
    EnvelopeState,
    WallSurface,
    ZoneConfig,
    assemble_thermal_system,
    ideal_zone_sensible_load,
    steady_state,
    step_thermal,
)
from .errors import (
    ConfigurationError,
    DomainError,
    FittingError,
    SplitsimError,
    ValidationError,
)
from .hvac import (
    HvacConfig,
    HvacOutput,
    HvacState,
    controller_step,
    model0_step,
    model1_step,
    model2_step,
    startup_factor,
)
from .moisture import MoistureState, ideal_zone_latent_load, step_moisture
from .project import ProjectConfig, load_project, run_project
from .psychro import (
    MoistAirState,
    humidity_ratio_from_rh,
    humidity_ratio_from_wetbulb,
    moist_air_enthalpy,
    relative_humidity,
    saturation_humidity_ratio,
    saturation_vapor_pressure,
    specific_volume,
)
from .records import read_records_csv, write_hourly_csv, write_records_csv
from .simulate import (
    HourlyRecord,
    SimConfig,
    StepRecord,
    aggregate_hourly,
    compare_models,
    run_simulation,
)
from .weather import WeatherSample, WeatherSeries, interpolate_weather, load_weather_csv

__version__ = "0.1.0"
