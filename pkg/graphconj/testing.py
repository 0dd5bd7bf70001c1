"""
    graphconj.testing
    ~~~~~~~~~~~~~~~~~

    Brute-force oracles for small graphs and assertion helpers.

    The oracles enumerate every vertex subset (or every matching) and share
    no code with the search routines in :mod:`graphconj.invariants`, so they
    can check them. They are exponential: keep n small.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, List, Sequence, Tuple

from .graph import Graph

Edge = Tuple[int, int]


def _neighbors(g: Graph) -> List[set]:
    return [{u for u in range(g.n) if g.has_edge(v, u)} for v in range(g.n)]


def _subsets_by_size(n: int) -> Iterator[Tuple[int, ...]]:
    for size in range(n + 1):
        yield from combinations(range(n), size)


def _independent(nbrs: List[set], subset) -> bool:
    return all(v not in nbrs[u] for u, v in combinations(subset, 2))


def _dominating(nbrs: List[set], subset, n: int) -> bool:
    covered = set(subset)
    for v in subset:
        covered |= nbrs[v]
    return len(covered) == n


def brute_independence(g: Graph) -> int:
    nbrs = _neighbors(g)
    return max(len(s) for s in _subsets_by_size(g.n) if _independent(nbrs, s))


def brute_domination(g: Graph) -> int:
    nbrs = _neighbors(g)
    return next(len(s) for s in _subsets_by_size(g.n) if _dominating(nbrs, s, g.n))


def brute_independent_domination(g: Graph) -> int:
    nbrs = _neighbors(g)
    return next(
        len(s)
        for s in _subsets_by_size(g.n)
        if _independent(nbrs, s) and _dominating(nbrs, s, g.n)
    )


def all_matchings(g: Graph) -> Iterator[Tuple[Edge, ...]]:
    """Every matching of g, the empty one included."""
    edges = g.edges()

    def extend(start: int, used: frozenset, chosen: Tuple[Edge, ...]):
        yield chosen
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u not in used and v not in used:
                yield from extend(i + 1, used | {u, v}, chosen + (edges[i],))

    return extend(0, frozenset(), ())


def brute_matching(g: Graph) -> int:
    return max(len(m) for m in all_matchings(g))


def brute_min_maximal_matching(g: Graph) -> int:
    edges = g.edges()
    sizes = []
    for matching in all_matchings(g):
        covered = {v for e in matching for v in e}
        if all(u in covered or v in covered for u, v in edges):
            sizes.append(len(matching))
    return min(sizes)


def _forces_everything(nbrs: List[set], blue: set, n: int) -> bool:
    blue = set(blue)
    changed = True
    while changed:
        changed = False
        for v in list(blue):
            white = nbrs[v] - blue
            if len(white) == 1:
                blue |= white
                changed = True
    return len(blue) == n


def brute_zero_forcing(g: Graph) -> int:
    nbrs = _neighbors(g)
    return next(
        len(s)
        for s in _subsets_by_size(g.n)
        if s and _forces_everything(nbrs, set(s), g.n)
    )


def brute_annihilation(degrees: Sequence[int], m: int) -> int:
    """Largest vertex subset whose degrees sum to at most m."""
    return max(
        len(s)
        for s in _subsets_by_size(len(degrees))
        if sum(degrees[v] for v in s) <= m
    )


def _zeros_left(multiset: Counter) -> int:
    multiset = +multiset
    if min(multiset, default=0) < 0:
        raise ValueError("negative degree")
    largest = max(multiset, default=0)
    if largest == 0:
        return multiset[0]
    rest = multiset - Counter((largest,))
    values = sorted(rest.elements(), reverse=True)
    if largest > len(values) or values[largest - 1] == 0:
        raise ValueError("not graphic")
    lowered = Counter(v - 1 for v in values[:largest])
    return _zeros_left(lowered + Counter(values[largest:]))


def brute_residue(degrees: Sequence[int]) -> int:
    """Zeros left by Havel-Hakimi, each step rebuilding the multiset."""
    try:
        return _zeros_left(Counter(degrees))
    except ValueError:
        raise ValueError(f"{tuple(degrees)} is not graphic") from None


def brute_harmonic(g: Graph) -> Fraction:
    """Sum of 1 / (d(u) + d(v)) over ordered adjacent pairs."""
    nbrs = _neighbors(g)
    return sum(
        (
            Fraction(1, len(nbrs[u]) + len(nbrs[v]))
            for u in range(g.n)
            for v in nbrs[u]
        ),
        Fraction(0),
    )


def is_realizable(degrees: Sequence[int]) -> bool:
    """Search every edge set for a simple graph with these degrees."""
    n = len(degrees)
    if any(d < 0 or d > n - 1 for d in degrees) or sum(degrees) % 2:
        return False
    pairs = list(combinations(range(n), 2))
    # left[i][w]: pairs at index >= i that touch w
    left = [[0] * n for _ in range(len(pairs) + 1)]
    for i in range(len(pairs) - 1, -1, -1):
        left[i] = list(left[i + 1])
        for w in pairs[i]:
            left[i][w] += 1
    need = list(degrees)

    def place(i: int) -> bool:
        if not any(need):
            return True
        if any(need[w] > left[i][w] for w in range(n)):
            return False
        u, v = pairs[i]
        if need[u] and need[v]:
            need[u] -= 1
            need[v] -= 1
            if place(i + 1):
                return True
            need[u] += 1
            need[v] += 1
        return place(i + 1)

    return place(0)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    target = set(h.edges())
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges()):
            return True
    return False


def assert_isomorphic(first: Graph, second: Graph, msg=None):
    if msg is None:
        msg = "Comparing %r and %r: graphs are not isomorphic" % (first, second)
    assert brute_isomorphic(first, second), msg


def assert_record_matches_oracles(rec, g: Graph, msg=None):
    """Compare an invariant record against every brute-force oracle."""
    expected = {
        "alpha": brute_independence(g),
        "mu": brute_matching(g),
        "mu_star": brute_min_maximal_matching(g),
        "indep_dom": brute_independent_domination(g),
        "dom": brute_domination(g),
        "zero_forcing": brute_zero_forcing(g),
        "annihilation": brute_annihilation(g.degrees, g.m),
        "residue": brute_residue(g.degrees),
        "harmonic": brute_harmonic(g),
    }
    for name, value in expected.items():
        got = getattr(rec, name)
        assert got == value, (msg or "") + " %s: got %r, expected %r for %r" % (
            name,
            got,
            value,
            g,
        )
