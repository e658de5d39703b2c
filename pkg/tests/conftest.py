import numpy as np
import pytest

from kms.graphs import Graph, graph_from_edges, is_connected


@pytest.fixture
def rng():
    return np.random.default_rng(1729)


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return graph_from_edges(n, edges)


def random_connected_graph(rng, n: int, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g
