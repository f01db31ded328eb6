"""Shared strategies and the acceptance summary hook."""

from __future__ import annotations

from hypothesis import strategies as st

from avoidablepaths import Graph, vertex_pairs


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    """A labeled graph with a uniformly random edge mask."""
    n = draw(st.integers(min_n, max_n))
    npairs = len(vertex_pairs(n))
    mask = draw(st.integers(0, (1 << npairs) - 1)) if npairs else 0
    return Graph.from_edge_mask(n, mask)


# ----------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion in the summary

_ACCEPTANCE_RESULTS: dict[str, str] = {}
ACCEPTANCE_NOTES: list[str] = []


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid or "test_criterion" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.failed:
        _ACCEPTANCE_RESULTS[name] = "ERROR"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{name}: {_ACCEPTANCE_RESULTS[name]}")
    for note in ACCEPTANCE_NOTES:
        terminalreporter.write_line(note)
