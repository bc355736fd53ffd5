from importlib.resources import files
from pathlib import Path

import pytest

from splitsim.coil import CoilPerformanceTable, fit_capacity_regression, load_coil_table_csv


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return Path(str(files("splitsim").joinpath("data")))


@pytest.fixture(scope="session")
def coil_table(data_dir) -> CoilPerformanceTable:
    return load_coil_table_csv(data_dir / "coil_rating_table.csv")


@pytest.fixture(scope="session")
def coil_regression(coil_table):
    return fit_capacity_regression(coil_table)


@pytest.fixture(scope="session")
def default_project_path(data_dir) -> Path:
    return data_dir / "default_project.json"
