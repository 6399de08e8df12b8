import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import acceptance_log  # noqa: E402


@pytest.fixture(scope="session")
def matrix_reports():
    from harmrad.verify import verification_matrix

    return verification_matrix(grid=(512, 512))


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
