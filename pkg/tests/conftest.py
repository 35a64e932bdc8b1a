import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from chaindec.bigraph import BipartiteGraph, Side  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@st.composite
def bipartite_graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    sides = draw(st.lists(st.sampled_from([Side.LEFT, Side.RIGHT]), min_size=n, max_size=n))
    side = {v + 1: s for v, s in enumerate(sides)}
    cross = [(u, v) for u in side for v in side if u < v and side[u] is not side[v]]
    edges = draw(st.sets(st.sampled_from(cross))) if cross else set()
    return BipartiteGraph(side, edges)


@pytest.fixture
def record_acceptance():
    def record(number: int, name: str, passed: bool, detail: str = ""):
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number}: {name}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
