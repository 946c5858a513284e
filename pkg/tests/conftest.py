import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fineforms.params import Level, valid_pairs  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=valid_pairs(7, Level.STRONG), ids=lambda P: f"p{P.p}r{P.r}")
def strong(request):
    return request.param


@pytest.fixture(params=valid_pairs(7, Level.WEAK), ids=lambda P: f"p{P.p}r{P.r}")
def weak(request):
    return request.param
