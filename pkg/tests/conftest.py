import itertools
from functools import lru_cache

import pytest

from cliqueceiling import from_edges, gen_gnp

GNP_SIZES = range(6, 13)
GNP_PROBS = (0.2, 0.5, 0.8)
GNP_PER_CELL = 500

# the 7-vertex primary instance of the worked example, 0-based
EXAMPLE_EDGES = [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (5, 6)]


@pytest.fixture
def example_graph():
    return from_edges(7, EXAMPLE_EDGES)


def exhaustive_graphs(max_n=5):
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield from_edges(n, [p for b, p in enumerate(pairs) if mask >> b & 1])


@lru_cache(maxsize=None)
def corpus():
    """All labelled graphs on <= 5 vertices plus seeded G(n, p) for n in 6..12."""
    graphs = list(exhaustive_graphs())
    for n in GNP_SIZES:
        for pi, p in enumerate(GNP_PROBS):
            for i in range(GNP_PER_CELL):
                graphs.append(gen_gnp(n, p, seed=n * 100_000 + pi * 10_000 + i))
    return tuple(graphs)


_RESULTS = []


@pytest.fixture
def record():
    def _record(name, ok, detail=""):
        _RESULTS.append((name, ok, detail))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
