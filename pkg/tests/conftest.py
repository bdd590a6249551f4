import functools
import random

import networkx as nx
import pytest

from dchordal.graph import Graph, from_edges, is_connected


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


@functools.lru_cache(maxsize=None)
def atlas_connected(max_n=7):
    """Every connected graph on 1..max_n vertices, one per isomorphism class."""
    out = []
    for g in nx.graph_atlas_g():
        k = g.number_of_nodes()
        if 1 <= k <= max_n and nx.is_connected(g):
            out.append(from_edges(k, g.edges()))
    return tuple(out)


def random_connected(n, p, rng: random.Random):
    while True:
        G = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if is_connected(G):
            return G


@pytest.fixture(scope="session")
def atlas():
    return atlas_connected(7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
