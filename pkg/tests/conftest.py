import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from tempograph.core import make_graph

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
SEED = 20240611


@pytest.fixture(scope="session", autouse=True)
def _print_seed():
    print(f"\nrandom suite seed: {SEED}")


@st.composite
def temporal_graphs(draw, directed=None, max_vertices=5, max_edges=6, max_label=3, simple=False):
    if directed is None:
        directed = draw(st.booleans())
    n = draw(st.integers(1, max_vertices))
    names = "abcdefgh"[:n]
    edges = []
    if n >= 2:
        pairs = [(u, v) for u in names for v in names if u != v and (directed or u < v)]
        chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_edges, unique=True))
        for u, v in chosen:
            size = 1 if simple else draw(st.integers(1, 2))
            labels = draw(st.lists(st.integers(1, max_label), min_size=size, max_size=size, unique=True))
            edges.append((u, v, labels))
    return make_graph(directed, names, edges)


def tg(directed, vertices, edges):
    """Shorthand: edges as (u, v, labels-or-int)."""
    return make_graph(directed, vertices, [(u, v, ls if isinstance(ls, (list, tuple, set)) else [ls])
                                           for u, v, ls in edges])


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
