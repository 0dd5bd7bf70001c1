"""
    graphconj.invariants
    ~~~~~~~~~~~~~~~~~~~~

    Exact graph invariants. Every search works on vertex bitsets and every
    value is an int or a Fraction, so comparisons never round.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ._typing import VertexSet
from .canon import canonical_form
from .compat import popcount
from .errors import InvariantError
from .graph import (
    DegreeSequence,
    Graph,
    components,
    degree_sequence,
    is_bipartite,
    is_claw_free,
    is_connected,
    is_regular,
    is_triangle_free,
)
from .util import bits_of, iter_bits, lowest_bit

_INFINITY = float("inf")


# Independence


def _max_independent(adj, cand: VertexSet, memo: Dict[int, int]) -> int:
    if not cand:
        return 0
    if cand in memo:
        return memo[cand]

    low_v, low_d, high_v, high_d = -1, _INFINITY, -1, -1
    for v in iter_bits(cand):
        d = popcount(adj[v] & cand)
        if d < low_d:
            low_v, low_d = v, d
        if d > high_d:
            high_v, high_d = v, d

    if low_d <= 1:
        # a vertex of degree at most one belongs to some maximum independent set
        result = 1 + _max_independent(adj, cand & ~(1 << low_v) & ~adj[low_v], memo)
    else:
        v = high_v
        result = max(
            _max_independent(adj, cand & ~(1 << v), memo),
            1 + _max_independent(adj, cand & ~(1 << v) & ~adj[v], memo),
        )
    memo[cand] = result
    return result


def independence_number(g: Graph) -> int:
    """alpha(G): size of a maximum independent set."""
    return _max_independent(g.adj, g.vertex_mask, {})


# Matchings


def matching_number(g: Graph) -> int:
    """mu(G): size of a maximum matching, by exact search over vertex masks."""
    adj = g.adj
    memo: Dict[int, int] = {}

    def best(rem: int) -> int:
        while rem and not adj[lowest_bit(rem)] & rem:
            rem &= rem - 1
        if not rem:
            return 0
        if rem in memo:
            return memo[rem]
        v = lowest_bit(rem)
        rest = rem & ~(1 << v)
        result = best(rest)
        for u in iter_bits(adj[v] & rest):
            result = max(result, 1 + best(rest & ~(1 << u)))
        memo[rem] = result
        return result

    return best(g.vertex_mask)


def min_maximal_matching(g: Graph) -> int:
    """mu*(G): size of a smallest matching that no edge can extend.

    Vertices are decided lowest first. A vertex left unmatched forces all
    of its undecided neighbors to be matched; ``must`` holds those. The
    empty matching is maximal in an edgeless graph, which gives 0.
    """
    adj = g.adj
    memo: Dict[Tuple[int, int], float] = {}

    def best(rem: int, must: int) -> float:
        if not rem:
            return 0
        key = (rem, must)
        if key in memo:
            return memo[key]
        v = lowest_bit(rem)
        rest = rem & ~(1 << v)
        result = _INFINITY
        if not must >> v & 1:
            result = best(rest, must | (adj[v] & rest))
        for u in iter_bits(adj[v] & rest):
            below = rest & ~(1 << u)
            result = min(result, 1 + best(below, must & below))
        memo[key] = result
        return result

    value = best(g.vertex_mask, 0)
    if value == _INFINITY:
        raise InvariantError(f"no maximal matching found for {g!r}")
    return int(value)


# Domination


def _closed_neighborhoods(g: Graph) -> List[int]:
    return [row | 1 << v for v, row in enumerate(g.adj)]


def _greedy_dominating(closed: List[int], full: int, independent: bool) -> int:
    """Size of a greedy (independent) dominating set, an upper bound."""
    dominated, avail, size = 0, full, 0
    while dominated != full:
        pool = avail if independent else full
        u = max(iter_bits(pool), key=lambda x: popcount(closed[x] & ~dominated))
        dominated |= closed[u]
        avail &= ~closed[u]
        size += 1
    return size


def _min_dominating(g: Graph, independent: bool) -> int:
    closed = _closed_neighborhoods(g)
    full = g.vertex_mask
    reach = max(popcount(c) for c in closed)
    best = _greedy_dominating(closed, full, independent)

    def search(dominated: int, avail: int, size: int):
        nonlocal best
        if dominated == full:
            best = min(best, size)
            return
        undominated = popcount(full & ~dominated)
        if size + -(-undominated // reach) >= best:
            return
        v = lowest_bit(full & ~dominated)
        choices = closed[v] & avail if independent else closed[v]
        for u in iter_bits(choices):
            search(dominated | closed[u], avail & ~closed[u], size + 1)

    search(0, full, 0)
    return best


def independent_domination(g: Graph) -> int:
    """i(G): size of a smallest maximal independent set."""
    return _min_dominating(g, independent=True)


def domination_number(g: Graph) -> int:
    """gamma(G): size of a smallest dominating set."""
    return _min_dominating(g, independent=False)


# Zero forcing


def zero_forcing_closure(g: Graph, blue: VertexSet) -> VertexSet:
    """Apply the colour-change rule until nothing changes.

    A blue vertex with exactly one white neighbor turns that neighbor blue.
    The fixed point does not depend on the order of the forces.
    """
    adj = g.adj
    changed = True
    while changed:
        changed = False
        for u in iter_bits(blue):
            white = adj[u] & ~blue
            if white and not white & (white - 1):
                blue |= white
                changed = True
    return blue


def _zero_forcing_connected(g: Graph) -> int:
    n = g.n
    if n == 1:
        return 1
    full = g.vertex_mask
    for size in range(max(1, min(g.degrees)), n + 1):
        for subset in combinations(range(n), size):
            if zero_forcing_closure(g, bits_of(subset)) == full:
                return size
    raise InvariantError(f"the full vertex set of {g!r} does not force")


def zero_forcing_number(g: Graph) -> int:
    """Z(G); summed over the components of a disconnected graph."""
    parts = components(g)
    if len(parts) == 1:
        return _zero_forcing_connected(g)
    return sum(_zero_forcing_connected(g.induced(mask)[0]) for mask in parts)


# Degree sequence invariants


def annihilation_number(ds: DegreeSequence, m: int) -> int:
    """a(G): largest j such that the j smallest degrees sum to at most m."""
    total, j = 0, 0
    for d in sorted(ds):
        total += d
        if total > m:
            break
        j += 1
    return j


def havel_hakimi_reduce(ds) -> Tuple[Tuple[int, ...], bool]:
    """Run the Havel-Hakimi process.

    Returns the final sequence and whether the input is graphic. A graphic
    sequence ends as all zeros; a failing step returns the sequence reached.
    """
    seq = sorted(ds, reverse=True)
    if seq and seq[-1] < 0:
        return tuple(seq), False
    while seq and seq[0] > 0:
        first = seq.pop(0)
        if first > len(seq):
            return tuple([first] + seq), False
        for i in range(first):
            seq[i] -= 1
            if seq[i] < 0:
                return tuple(seq), False
        seq.sort(reverse=True)
    return tuple(seq), True


def residue(g: Graph) -> int:
    """R(G): number of zeros left by the Havel-Hakimi process."""
    final, graphic = havel_hakimi_reduce(degree_sequence(g))
    if not graphic:
        raise InvariantError(f"degree sequence of {g!r} reported as not graphic")
    return len(final)


def harmonic_index(g: Graph) -> Fraction:
    """H(G): sum over edges uv of 2 / (d(u) + d(v)), exactly."""
    degrees = g.degrees
    return sum(
        (Fraction(2, degrees[u] + degrees[v]) for u, v in g.edges()), Fraction(0)
    )


# Records


@dataclass(frozen=True)
class InvariantRecord:
    """Every invariant and structural flag of one graph."""

    graph_id: str
    graph6: str
    n: int
    m: int
    alpha: int
    mu: int
    mu_star: int
    indep_dom: int
    dom: int
    zero_forcing: int
    annihilation: int
    residue: int
    harmonic: Fraction
    max_deg: int
    min_deg: int
    connected: bool
    bipartite: bool
    claw_free: bool
    regular: Optional[int]
    konig_egervary: bool

    def to_dict(self) -> dict:
        return asdict(self)


class GraphInvariants:
    """Lazily computed invariants of a graph.

    Attributes carry the same names as :class:`InvariantRecord` fields, so
    conjectures can be evaluated on either; cheap structural attributes are
    available without running any exponential search.
    """

    def __init__(self, g: Graph, graph_id: Optional[str] = None):
        self.graph = g
        self._graph_id = graph_id

    def __repr__(self):
        return f"<GraphInvariants({self.graph!r})>"

    @cached_property
    def graph_id(self) -> str:
        return self._graph_id or self.graph6

    @cached_property
    def graph6(self) -> str:
        return canonical_form(self.graph).decode("ascii")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def degree_sequence(self) -> DegreeSequence:
        return degree_sequence(self.graph)

    @cached_property
    def max_deg(self) -> int:
        return self.degree_sequence[0]

    @cached_property
    def min_deg(self) -> int:
        return self.degree_sequence[-1]

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.graph)

    @cached_property
    def claw_free(self) -> bool:
        return is_claw_free(self.graph)

    @cached_property
    def triangle_free(self) -> bool:
        return is_triangle_free(self.graph)

    @cached_property
    def regular(self) -> Optional[int]:
        return is_regular(self.graph)

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.graph)

    @cached_property
    def mu(self) -> int:
        return matching_number(self.graph)

    @cached_property
    def mu_star(self) -> int:
        return min_maximal_matching(self.graph)

    @cached_property
    def indep_dom(self) -> int:
        return independent_domination(self.graph)

    @cached_property
    def dom(self) -> int:
        return domination_number(self.graph)

    @cached_property
    def zero_forcing(self) -> int:
        return zero_forcing_number(self.graph)

    @cached_property
    def annihilation(self) -> int:
        return annihilation_number(self.degree_sequence, self.graph.m)

    @cached_property
    def residue(self) -> int:
        return residue(self.graph)

    @cached_property
    def harmonic(self) -> Fraction:
        return harmonic_index(self.graph)

    @cached_property
    def konig_egervary(self) -> bool:
        return self.alpha + self.mu == self.n

    def record(self) -> InvariantRecord:
        """Compute everything and check the known bounds between invariants."""
        rec = InvariantRecord(
            graph_id=self.graph_id,
            graph6=self.graph6,
            n=self.n,
            m=self.m,
            alpha=self.alpha,
            mu=self.mu,
            mu_star=self.mu_star,
            indep_dom=self.indep_dom,
            dom=self.dom,
            zero_forcing=self.zero_forcing,
            annihilation=self.annihilation,
            residue=self.residue,
            harmonic=self.harmonic,
            max_deg=self.max_deg,
            min_deg=self.min_deg,
            connected=self.connected,
            bipartite=self.bipartite,
            claw_free=self.claw_free,
            regular=self.regular,
            konig_egervary=self.konig_egervary,
        )
        if not rec.residue <= rec.alpha <= rec.annihilation:
            raise InvariantError(
                f"{rec.graph_id}: R = {rec.residue}, alpha = {rec.alpha}, "
                f"a = {rec.annihilation} break R <= alpha <= a"
            )
        if not rec.mu_star <= rec.mu <= rec.n // 2:
            raise InvariantError(
                f"{rec.graph_id}: mu* = {rec.mu_star}, mu = {rec.mu} break "
                f"mu* <= mu <= n/2"
            )
        return rec


def invariant_record(g: Graph, graph_id: Optional[str] = None) -> InvariantRecord:
    return GraphInvariants(g, graph_id).record()
