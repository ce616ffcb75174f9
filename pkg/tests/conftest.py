from __future__ import annotations

import pytest
from hypothesis import HealthCheck, seed, settings

settings.register_profile(
    "npcube",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("npcube")

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240, help="seed for every randomized test")


@pytest.fixture(scope="session")
def seed_value(request) -> int:
    return request.config.getoption("--seed")


def pytest_collection_modifyitems(config, items):
    # pin hypothesis to the same seed so runs are reproducible
    n = config.getoption("--seed")
    for item in items:
        fn = getattr(item, "obj", None)
        if fn is not None and getattr(fn, "is_hypothesis_test", False):
            seed(n)(fn)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
