import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# the pattern sets named in the OEIS identifications plus the worked examples
BATTERY = [
    [[1]],
    [[2]],
    [[1], [0, 0]],
    [[2], [0, 0]],
    [[0, 0]],
    [[0, 0, 0]],
    [[0, 0, 0, 0]],
    [[0, 1]],
    [[1, 0]],
    [[1, 1, 1]],
    [[2, 1], [1, 1]],
]

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
