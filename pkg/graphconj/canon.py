"""
    graphconj.canon
    ~~~~~~~~~~~~~~~

    Canonical labelling and isomorphism testing.

    The canonical form of a graph is the graph6 encoding of its relabelling
    under the vertex order whose upper-triangle bit string (column by column,
    row 0 most significant) is lexicographically largest among all orders
    compatible with the colour refinement partition. The partition is an
    isomorphism invariant, hence so is the maximum.

    The search places one vertex per position. At every position only the
    candidates giving the largest column can lead to the maximum, so the
    remaining work is spent on ties. Ties are cut three ways: prefixes below
    the best known key, twins (the transposition of two twins is an
    automorphism fixing every placed vertex) and, at the root, orbits of the
    automorphisms discovered as equal leaves.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from .formats import write_graph6
from .graph import Graph
from .util import iter_bits, logger


def refine_colors(g: Graph) -> List[int]:
    """Stable colour refinement starting from vertex degrees.

    Colours are ranks of sorted signatures, so equal inputs up to
    relabelling produce equal colour multisets.
    """
    adj = g.adj
    colors = list(g.degrees)
    count = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
            for v in range(g.n)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        colors = [ranking[sig] for sig in signatures]
        if len(ranking) == count:
            return colors
        count = len(ranking)


class _Orbits:
    """Union-find over vertices, merged along discovered automorphisms."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(self, u: int, v: int):
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[max(ru, rv)] = min(ru, rv)


class _CanonicalSearch:
    def __init__(self, g: Graph):
        self.g = g
        n, adj = g.n, g.adj
        colors = refine_colors(g)

        cell_masks: Dict[int, int] = {}
        for v, c in enumerate(colors):
            cell_masks[c] = cell_masks.get(c, 0) | 1 << v
        #: cell allowed at each position
        self.position_cells = [cell_masks[c] for c in sorted(colors)]

        twins = [0] * n
        for v in range(n):
            for w in range(v + 1, n):
                if colors[v] != colors[w]:
                    continue
                if adj[v] & ~(1 << w) == adj[w] & ~(1 << v):
                    twins[v] |= 1 << w
                    twins[w] |= 1 << v
        self.twins = twins

        self.best: Optional[List[int]] = None
        self.best_order: Optional[List[int]] = None
        self.orbits = _Orbits(n)
        self.leaves = 0
        self.automorphisms = 0

    def _column(self, v: int, order: List[int]) -> int:
        row = self.g.adj[v]
        value = 0
        for u in order:
            value = (value << 1) | (row >> u & 1)
        return value

    def run(self) -> List[int]:
        self._extend([], 0, [])
        return self.best_order

    def _extend(self, order: List[int], placed: int, columns: List[int]):
        k = len(order)
        if k == self.g.n:
            self._leaf(order, columns)
            return

        candidates = self.position_cells[k] & ~placed
        values = {v: self._column(v, order) for v in iter_bits(candidates)}
        top = max(values.values())

        if self.best is not None:
            if columns + [top] < self.best[: k + 1]:
                return

        tried = 0
        explored_roots: List[int] = []
        for v, value in values.items():
            if value != top:
                continue
            if self.twins[v] & tried:
                continue
            if k == 0:
                root = self.orbits.find(v)
                if any(self.orbits.find(u) == root for u in explored_roots):
                    continue
                explored_roots.append(v)
            tried |= 1 << v
            order.append(v)
            columns.append(top)
            self._extend(order, placed | 1 << v, columns)
            order.pop()
            columns.pop()

    def _leaf(self, order: List[int], columns: List[int]):
        self.leaves += 1
        if self.best is None or columns > self.best:
            self.best = list(columns)
            self.best_order = list(order)
        elif columns == self.best:
            # best_order[i] -> order[i] preserves adjacency
            self.automorphisms += 1
            for u, v in zip(self.best_order, order):
                self.orbits.union(u, v)


def canonical_labeling(g: Graph) -> List[int]:
    """Vertex order such that ``g.relabel(order)`` is the canonical graph."""
    search = _CanonicalSearch(g)
    order = search.run()
    if g.n > 16:
        logger.debug(
            "canonical labelling of %r: %d leaves, %d automorphisms",
            g,
            search.leaves,
            search.automorphisms,
        )
    return order


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 bytes; equal exactly for isomorphic graphs.

    Forms sort by vertex count first since the graph6 header encodes n.
    """
    return write_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
