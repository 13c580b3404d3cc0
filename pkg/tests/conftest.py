import pytest
from hypothesis import settings

from hookspecht.combinatorics import HookShape

settings.register_profile("ci", max_examples=25, deadline=None)
settings.load_profile("ci")


def hooks(n_max, n_min=1):
    return [HookShape(n - b, b) for n in range(n_min, n_max + 1) for b in range(n)]


def domino_hooks(n_max):
    return [s for s in hooks(n_max, 3) if s.b % 2 == 0 and s.n % 2 == 1]


@pytest.fixture
def s32():
    return HookShape(3, 2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
