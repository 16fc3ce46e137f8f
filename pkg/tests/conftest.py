import os
from pathlib import Path

import pytest

from bipknot.sieve import run_theorem

# acceptance lines collected during the run, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    # BIPKNOT_CACHE lets repeated local runs skip re-enumeration
    d = os.environ.get("BIPKNOT_CACHE")
    return Path(d) if d else tmp_path_factory.mktemp("cache")


@pytest.fixture(scope="session")
def report21(cache_dir):
    return run_theorem(21, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def report22(cache_dir):
    return run_theorem(22, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def report23(cache_dir):
    return run_theorem(23, cache_dir=cache_dir)
