import numpy as np
import pytest

from beatpath import CandidateSet, MarginMatrix

# Table 1 and Table 2 beatpath strengths, rows are B(x, .) in candidate order
TABLE_1 = [[None, 2, 0], [0, None, 0], [0, 0, None]]
TABLE_2 = [
    [None, 2, 6, 4],
    [1, None, 5, 3],
    [1, 2, None, 3],
    [1, 2, 2, None],
]

EXAMPLE_1_BALLOTS = "A > B > C\nC > A > B\nA > C > B\nB > C > A\n"


def example_1() -> MarginMatrix:
    return MarginMatrix.from_upper(CandidateSet("ABC"), {("A", "B"): 2, ("A", "C"): 0, ("B", "C"): 0})


def example_2() -> MarginMatrix:
    return MarginMatrix.from_upper(
        CandidateSet("ABCD"),
        {("B", "A"): 1, ("D", "B"): 2, ("C", "D"): 3, ("A", "D"): 4, ("A", "C"): 6, ("B", "C"): 5},
    )


@pytest.fixture
def ex1():
    return example_1()


@pytest.fixture
def ex2():
    return example_2()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for the acceptance summary."""
    name = request.node.name.removeprefix("test_")
    details: dict[str, str] = {}
    yield details
    call = getattr(request.node, "rep_call", None)
    ok = call is not None and call.passed
    note = f" ({details['note']})" if "note" in details else ""
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}{note}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
