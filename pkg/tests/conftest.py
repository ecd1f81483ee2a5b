import sys

import pytest

from golden import KB


@pytest.fixture
def penguins():
    return KB("penguins")


@pytest.fixture
def musicians():
    return KB("musicians")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
