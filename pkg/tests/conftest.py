import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from nesthilb.exactcore.field import Field  # noqa: E402


@pytest.fixture
def fp():
    return Field.prime()


@pytest.fixture
def qq():
    return Field.rationals()


@pytest.fixture(params=["fp", "q"])
def field(request):
    return Field.prime() if request.param == "fp" else Field.rationals()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
