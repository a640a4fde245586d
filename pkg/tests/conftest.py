import json
from pathlib import Path

import pytest

from singular_lab import FrobeniusSymbol, ModulusPair, Partition

FIXTURES = Path(__file__).parent / "fixtures"

# (label, PASS/FAIL, detail) lines from test_acceptance, echoed at the end of the run
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def load_fixture(name):
    with open(FIXTURES / name, encoding="utf-8") as fh:
        return json.load(fh)


def from_multiplicities(mult):
    """``{"13": 9, ...}`` -> Partition with 13 repeated nine times, etc."""
    parts = []
    for value, count in mult.items():
        parts += [int(value)] * count
    return Partition.from_parts(parts)


# the 16-column symbol used in the block examples (as printed)
EXAMPLE_TOP = (31, 28, 27, 25, 22, 18, 16, 14, 13, 9, 8, 7, 6, 4, 1, 0)
EXAMPLE_BOTTOM = (30, 28, 25, 24, 20, 19, 16, 15, 12, 11, 8, 7, 4, 3, 2, 0)


@pytest.fixture
def example_symbol():
    return FrobeniusSymbol(EXAMPLE_TOP, EXAMPLE_BOTTOM)


@pytest.fixture
def mod52():
    return ModulusPair(5, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
