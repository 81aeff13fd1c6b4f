"""Shared fixtures: small grids/plans for unit tests, full-size ones for
the acceptance suite, and a terminal-summary hook that prints one line per
acceptance criterion."""

import pytest

from hartley_bessel.quadrature import build_grid
from hartley_bessel.transform import build_plan

# (criterion label, pass/fail, detail) tuples recorded by test_acceptance.
ACCEPTANCE_RESULTS = []


def record_criterion(label, passed, detail=""):
    ACCEPTANCE_RESULTS.append((label, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE_RESULTS:
        verdict = "PASS" if passed else "FAIL"
        line = f"{verdict}  {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_grid():
    return build_grid(1.0, 10.0, 60, 3)


@pytest.fixture(scope="session")
def small_plan(small_grid):
    return build_plan(small_grid)


@pytest.fixture(scope="session")
def half_grid():
    return build_grid(0.5, 10.0, 60, 3)


@pytest.fixture(scope="session")
def half_plan(half_grid):
    return build_plan(half_grid)


@pytest.fixture(scope="session")
def acceptance_plans():
    """Default-resolution and doubled plans for alpha in {0.5, 1, 2.5}."""
    plans = {}
    for alpha in (0.5, 1.0, 2.5):
        coarse = build_plan(build_grid(alpha, 12.0, 400, 3))
        fine = build_plan(build_grid(alpha, 12.0, 800, 3))
        plans[alpha] = (coarse, fine)
    return plans
