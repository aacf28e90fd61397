import os

import pytest
from hypothesis import HealthCheck, settings

from ineqlab import Exponential, Lognormal, Pareto, Uniform, Zenga

settings.register_profile(
    "ineqlab", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ineqlab"))

_ACCEPTANCE = pytest.StashKey[list]()


def four_families():
    return [Exponential(1.0), Uniform(0.0, 1.0), Lognormal(0.0, 0.5), Pareto(1.0, 3.0)]


@pytest.fixture
def families():
    return four_families()


@pytest.fixture(scope="session")
def zenga_pair():
    return Zenga(2.0, 3.0, 2.0), Zenga(2.0, 2.0, 3.0)


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
