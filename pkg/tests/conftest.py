from __future__ import annotations

import pytest

from linecodes.code import AdditiveLineCode
from linecodes.geometry import point_in_hyperplane

# filled by test_acceptance.py, printed after the run
ACCEPTANCE_RESULTS: dict = {}


def naive_loads(code: AdditiveLineCode) -> list:
    """Inside-counts per hyperplane, testing all three points of every line."""
    loads = [0]
    for h in range(1, 1 << code.l):
        loads.append(
            sum(mult for line, mult in code.lines if all(point_in_hyperplane(p, h) for p in line.points))
        )
    return loads


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def record_acceptance():
    def record(key: str, ok: bool, detail: str) -> None:
        ACCEPTANCE_RESULTS[key] = (ok, detail)

    return record
