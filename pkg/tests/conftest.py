from pathlib import Path

import pytest
from hypothesis import settings

from planecurves.parser import parse_poly
from planecurves.report import load_curve_file
from planecurves.verify import default_fixture_dir

# exact arithmetic timings vary a lot between examples; no per-example deadline
settings.register_profile("default", deadline=None)
settings.load_profile("default")

FIXTURES = default_fixture_dir()

CUSPIDAL_SEXTIC = "(y^2*z - x^3)^2 - x^3*y^3"
NODAL_CUBIC = "y^2*z - x^2*(x + z)"


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def load():
    cache = {}

    def _load(name):
        if name not in cache:
            cache[name] = load_curve_file(Path(FIXTURES) / f"{name}.json")
        return cache[name]

    return _load


@pytest.fixture(scope="session")
def sextic():
    return parse_poly(CUSPIDAL_SEXTIC)
