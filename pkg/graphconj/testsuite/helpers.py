import pytest

from ..compat import HAS_NETWORKX, nx
from ..graph import Graph

requires_networkx = pytest.mark.skipif(not HAS_NETWORKX, reason="Requires networkx")


def to_networkx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
