import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sqdisc.constructions import classify_coeff_set  # noqa: E402

ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def rng():
    return random.Random(20241016)


@pytest.fixture(scope="session")
def pm1():
    return classify_coeff_set({-1, 1})


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
