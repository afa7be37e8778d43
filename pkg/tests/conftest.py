import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tonalmath.coincidence import chromatic_analyses  # noqa: E402


@pytest.fixture(scope="session")
def d2_analyses():
    """Chromatic dyads of D2 at the default pairing tolerance and horizon."""
    return chromatic_analyses("D2")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
