"""
    graphconj.graph
    ~~~~~~~~~~~~~~~

    Simple undirected graphs stored as per-vertex bitsets, structural
    predicates and the named constructions used by the conjectures.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ._typing import AdjacencyRows
from .compat import popcount
from .errors import GraphError, GraphSizeError
from .util import iter_bits

#: Adjacency rows are machine words.
MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """A finite, simple, undirected graph on vertices ``0 .. n-1``.

    ``adj[v]`` is the bitset of neighbors of ``v``. Instances are immutable
    and can be shared between threads and processes.
    """

    n: int
    adj: AdjacencyRows
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.adj, tuple):
            object.__setattr__(self, "adj", tuple(self.adj))
        n, adj = self.n, self.adj
        if n < 1:
            raise GraphError(f"a graph needs at least one vertex, not {n}")
        if n > MAX_VERTICES:
            raise GraphSizeError("n", n)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} is adjacent to a vertex out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at edge {v}-{u}")
            total += popcount(row)
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
        """Build a graph from an edge iterable; duplicates collapse."""
        if n > MAX_VERTICES:
            raise GraphSizeError("n", n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n = {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def __repr__(self):
        return f"<Graph(n={self.n}, m={self.m})>"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(popcount(row) for row in self.adj)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def relabel(self, order: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``order[i]`` becomes vertex ``i``."""
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        rows = [0] * self.n
        for i, v in enumerate(order):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << position[u]
            rows[i] = row
        return Graph(self.n, tuple(rows))

    def induced(self, mask: int) -> Tuple[Graph, List[int]]:
        """Induced subgraph on a nonempty vertex bitset, with the kept vertices."""
        kept = list(iter_bits(mask))
        position = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for u in iter_bits(self.adj[v] & mask):
                row |= 1 << position[u]
            rows.append(row)
        return Graph(len(kept), tuple(rows)), kept


@dataclass(frozen=True)
class DegreeSequence:
    """Vertex degrees in nonincreasing order."""

    degrees: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.degrees, tuple):
            object.__setattr__(self, "degrees", tuple(self.degrees))
        if any(d < 0 for d in self.degrees):
            raise ValueError(f"degrees must be natural numbers: {self.degrees}")
        if any(a < b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValueError(f"degrees must be nonincreasing: {self.degrees}")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> DegreeSequence:
        return cls(tuple(sorted(values, reverse=True)))

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, item):
        return self.degrees[item]

    @property
    def total(self) -> int:
        return sum(self.degrees)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence.from_values(g.degrees)


def max_degree(g: Graph) -> int:
    return max(g.degrees)


def min_degree(g: Graph) -> int:
    return min(g.degrees)


def is_regular(g: Graph) -> Optional[int]:
    """Return r if every vertex has degree r, None otherwise."""
    degrees = g.degrees
    r = degrees[0]
    return r if all(d == r for d in degrees) else None


def components(g: Graph) -> List[int]:
    """Vertex bitsets of the connected components, ordered by lowest vertex."""
    out = []
    remaining = g.vertex_mask
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        out.append(seen)
        remaining &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    for comp in components(g):
        start = comp & -comp
        sides = [start, 0]
        frontier, side, seen = start, 0, start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            if reach & sides[side]:
                return False
            side ^= 1
            frontier = reach & ~seen
            sides[side] |= frontier
            seen |= frontier
        if sides[0] & sides[1]:
            return False
    return True


def is_claw_free(g: Graph) -> bool:
    """True iff no vertex has three pairwise nonadjacent neighbors."""
    adj = g.adj
    for v in range(g.n):
        nbrs = adj[v]
        if popcount(nbrs) < 3:
            continue
        for u in iter_bits(nbrs):
            # w > u nonadjacent to u, then x > w nonadjacent to both
            rest = nbrs & ~adj[u] & ~((2 << u) - 1)
            for w in iter_bits(rest):
                if rest & ~adj[w] & ~((2 << w) - 1):
                    return False
    return True


def is_triangle_free(g: Graph) -> bool:
    return not any(g.adj[u] & g.adj[v] for u, v in g.edges())


def line_graph(g: Graph) -> Graph:
    """L(G): one vertex per edge (lexicographic edge order), adjacent iff edges meet."""
    edges = g.edges()
    if not edges:
        raise GraphError("the line graph of an edgeless graph has no vertices")
    if len(edges) > MAX_VERTICES:
        raise GraphSizeError("m", len(edges))
    incident = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = tuple(
        (incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)
    )
    return Graph(len(edges), rows)


# Named constructions


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, not {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centers 0 and 1 carrying a and b pendant leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return Graph.from_edges(a + b + 2, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


_NAMED_PATTERNS = (
    # regex, constructor, canonical spelling, order of the result
    (re.compile(r"^K_?\{?(\d+)\}?$"), complete_graph, "K{}", lambda n: n),
    (
        re.compile(r"^K_?\{?(\d+)[,_](\d+)\}?$"),
        complete_bipartite_graph,
        "K{}_{}",
        lambda a, b: a + b,
    ),
    (re.compile(r"^C_?\{?(\d+)\}?$"), cycle_graph, "C{}", lambda n: n),
    (re.compile(r"^P_?\{?(\d+)\}?$"), path_graph, "P{}", lambda n: n),
    (
        re.compile(r"^double_star\((\d+),(\d+)\)$"),
        double_star,
        "double_star({},{})",
        lambda a, b: a + b + 2,
    ),
    (re.compile(r"^petersen$"), petersen_graph, "petersen", lambda: 10),
)


def _match_name(name: str):
    text = re.sub(r"\s+", "", name)
    for regex, builder, template, order in _NAMED_PATTERNS:
        match = regex.match(text)
        if match:
            params = tuple(int(x) for x in match.groups())
            return builder, template, order(*params), params
    raise GraphError(f"unknown named graph '{name}'")


def normalize_graph_name(name: str) -> str:
    """Canonical spelling of a named graph, e.g. ``K_{3,3}`` -> ``K3_3``."""
    _, template, _, params = _match_name(name)
    return template.format(*params)


def named_graph(name: str) -> Graph:
    """Build a named graph: ``K4``, ``C5``, ``P4``, ``K3_3``, ``double_star(2,2)``,
    ``petersen``.
    """
    builder, _, order, params = _match_name(name)
    if order > MAX_VERTICES:
        raise GraphSizeError("n", order)
    return builder(*params)
