import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from covergraph.construct import all_graphs, complete, cycle, path
from covergraph.graph import Graph, adjacency, parse_graph

SIX_VERTEX_EXAMPLE = (
    "n 6\ne 1 2\ne 2 3\ne 3 4\ne 1 4\ne 2 5\ne 4 5\ne 5 6\n"
)


@pytest.fixture
def example6() -> Graph:
    """Six-vertex graph whose derived graph is K_{2,2} plus K_{1,1}."""
    return parse_graph(SIX_VERTEX_EXAMPLE)


@pytest.fixture
def square_with_pendant() -> Graph:
    return Graph.of(5, [(1, 2), (2, 3), (3, 4), (4, 1), (2, 5)])


@pytest.fixture(scope="session")
def small_graphs():
    """Exhaustive labeled corpus, n <= 5."""
    return [g for n in range(1, 6) for g in all_graphs(n)]


@pytest.fixture(scope="session")
def small_graphs_with_edge(small_graphs):
    return [g for g in small_graphs if g.edges]


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion, after capture ends."""
    try:
        from test_acceptance import GATE_LINES
    except ImportError:
        return
    if GATE_LINES:
        terminalreporter.section("acceptance gate")
        for line in sorted(GATE_LINES):
            terminalreporter.write_line(line)


def graphs_without_isolated(graphs):
    return [
        g
        for g in graphs
        if g.edges and all(adjacency(g)[v] for v in g.vertices())
    ]
