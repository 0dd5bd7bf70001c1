"""
    graphconj.enumeration
    ~~~~~~~~~~~~~~~~~~~~~

    Isomorph-free generation of small connected graphs and random regular
    graphs.

    Connected graphs on n vertices are grown one vertex at a time: every
    connected graph has a vertex whose removal leaves it connected, so
    joining a new vertex to every nonempty vertex subset of every connected
    graph on n - 1 vertices reaches each class at least once. An extension
    is kept only if no non-cut vertex beats the new vertex on degree and
    sorted neighbour degrees, which discards most isomorphic copies before
    canonical labelling. Remaining duplicates are removed per level by
    canonical form.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import partial
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from .canon import canonical_labeling
from .errors import EnumerationBudgetError, GenerationError
from .formats import write_graph6
from .graph import Graph, is_claw_free, is_connected
from .util import bits_of, iter_bits, logger, parallel_map, popcount

#: Largest total number of graphs kept on one level.
DEFAULT_MAX_GRAPHS = 2_000_000

#: Restarts allowed per random regular graph.
DEFAULT_MAX_RETRIES = 10_000

#: Largest n for unrestricted and for degree bounded families.
MAX_ORDER_ALL = 10
MAX_ORDER_BOUNDED = 14

_REGULAR_RE = re.compile(r"^regular\((\d+)\)$")


@dataclass(frozen=True)
class FamilyFilter:
    """A graph family: a degree condition optionally combined with claw-freeness.

    ``degree`` is one of ``all``, ``cubic``, ``subcubic`` or ``regular``
    (the latter with ``r`` set).
    """

    degree: str = "all"
    r: Optional[int] = None
    claw_free: bool = False

    def __post_init__(self):
        if self.degree not in ("all", "cubic", "subcubic", "regular"):
            raise ValueError(f"unknown degree family '{self.degree}'")
        if (self.degree == "regular") != (self.r is not None):
            raise ValueError("regular families need a degree, others must not have one")
        if self.r is not None and self.r < 0:
            raise ValueError(f"regular degree must be natural, not {self.r}")

    @classmethod
    def from_string(cls, text: str) -> FamilyFilter:
        """Parse ``all``, ``cubic``, ``subcubic``, ``regular(r)``, ``claw_free``
        and ``+`` combinations such as ``cubic+claw_free``.
        """
        degree, r, claw_free = "all", None, False
        for part in re.sub(r"\s+", "", text).split("+"):
            match = _REGULAR_RE.match(part)
            if part == "claw_free":
                claw_free = True
            elif part in ("all", "cubic", "subcubic") or match:
                if degree != "all":
                    raise ValueError(f"family '{text}' combines two degree conditions")
                if match:
                    degree, r = "regular", int(match.group(1))
                else:
                    degree = part
            else:
                raise ValueError(f"unknown graph family '{part}'")
        return cls(degree, r, claw_free)

    def __str__(self):
        base = f"regular({self.r})" if self.degree == "regular" else self.degree
        if self.claw_free:
            return "claw_free" if base == "all" else base + "+claw_free"
        return base

    @property
    def degree_bound(self) -> Optional[int]:
        """Maximum degree allowed in the family, None if unbounded."""
        if self.degree in ("cubic", "subcubic"):
            return 3
        return self.r

    @property
    def regular_degree(self) -> Optional[int]:
        if self.degree == "cubic":
            return 3
        return self.r

    def accepts(self, g: Graph) -> bool:
        degrees = g.degrees
        if self.degree == "subcubic" and max(degrees) > 3:
            return False
        r = self.regular_degree
        if r is not None and any(d != r for d in degrees):
            return False
        if self.claw_free and not is_claw_free(g):
            return False
        return True


def _viable(g: Graph, family: FamilyFilter, target: int) -> bool:
    """True if g may still grow into a family member on ``target`` vertices."""
    if family.claw_free and not is_claw_free(g):
        return False
    r = family.regular_degree
    if r is None:
        return True
    # missing degree must be absorbed by the vertices still to come
    deficit = sum(r - d for d in g.degrees)
    room = r * (target - g.n)
    return deficit <= room and (room - deficit) % 2 == 0


def _vertex_key(rows: List[int], degrees: List[int], v: int) -> Tuple:
    """Isomorphism invariant of a vertex: degree, then sorted neighbour degrees."""
    return degrees[v], sorted(degrees[u] for u in iter_bits(rows[v]))


def _connected_without(rows: List[int], v: int) -> bool:
    mask = ((1 << len(rows)) - 1) & ~(1 << v)
    if not mask:
        return True
    seen = frontier = mask & -mask
    while frontier:
        reach = 0
        for u in iter_bits(frontier):
            reach |= rows[u]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def _may_be_deletion_vertex(rows: List[int], v: int) -> bool:
    """False if some non-cut vertex has a larger key than v.

    Every connected graph is reached from the parent obtained by deleting a
    non-cut vertex of largest key, so children failing this test are
    isomorphic to children that pass it.
    """
    degrees = [popcount(row) for row in rows]
    key = _vertex_key(rows, degrees, v)
    for u in range(len(rows)):
        if u == v or degrees[u] < key[0]:
            continue
        if degrees[u] == key[0] and _vertex_key(rows, degrees, u) <= key:
            continue
        if _connected_without(rows, u):
            return False
    return True


def _children(
    g: Graph, family: FamilyFilter, target: int
) -> List[Tuple[bytes, Graph]]:
    """One-vertex extensions of g, canonically relabelled and keyed by form."""
    n = g.n
    bound = family.degree_bound
    degrees = g.degrees
    eligible = [v for v in range(n) if bound is None or degrees[v] < bound]
    largest = len(eligible) if bound is None else min(bound, len(eligible))
    out = []
    for size in range(1, largest + 1):
        for subset in combinations(eligible, size):
            rows = list(g.adj)
            for v in subset:
                rows[v] |= 1 << n
            rows.append(bits_of(subset))
            if not _may_be_deletion_vertex(rows, n):
                continue
            child = Graph(n + 1, tuple(rows))
            if not _viable(child, family, target):
                continue
            canonical = child.relabel(canonical_labeling(child))
            out.append((write_graph6(canonical).encode("ascii"), canonical))
    return out


def _grow(
    target: int, family: FamilyFilter, max_graphs: int, workers: int
) -> Iterator[Tuple[int, List[Graph]]]:
    """Yield ``(k, viable graphs on k vertices)`` for k = 1 .. target."""
    level = [Graph(1, (0,))]
    if not _viable(level[0], family, target):
        level = []
    yield 1, level
    for k in range(2, target + 1):
        expand = partial(_children, family=family, target=target)
        found: Dict[bytes, Graph] = {}
        for children in parallel_map(expand, level, workers):
            for form, child in children:
                found.setdefault(form, child)
            if len(found) > max_graphs:
                raise EnumerationBudgetError(
                    f"more than {max_graphs} graphs on {k} vertices for family "
                    f"'{family}'; raise max_graphs or lower n"
                )
        level = [found[form] for form in sorted(found)]
        logger.debug("enumeration level %d: %d graphs (%s)", k, len(level), family)
        yield k, level


def _check_order(n: int, family: FamilyFilter):
    if n < 1:
        raise ValueError(f"graphs need at least one vertex, not {n}")
    limit = MAX_ORDER_ALL if family.degree_bound is None else MAX_ORDER_BOUNDED
    if n > limit:
        raise EnumerationBudgetError(
            f"enumeration of family '{family}' supports n <= {limit}, not {n}"
        )


def enumerate_connected(
    n: int,
    family: Optional[FamilyFilter] = None,
    max_graphs: int = DEFAULT_MAX_GRAPHS,
    workers: int = 1,
) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of connected graphs on n vertices
    in the family, in canonical form order.

    Each yielded graph is the canonical representative of its class.
    """
    family = family or FamilyFilter()
    _check_order(n, family)
    level: List[Graph] = []
    for _, level in _grow(n, family, max_graphs, workers):
        pass
    return (g for g in level if family.accepts(g))


def enumerate_connected_range(
    n_min: int,
    n_max: int,
    family: Optional[FamilyFilter] = None,
    max_graphs: int = DEFAULT_MAX_GRAPHS,
    workers: int = 1,
) -> Iterator[Graph]:
    """Chain :func:`enumerate_connected` for n = n_min .. n_max.

    Families without a regularity condition are grown once and every level
    is reported; regular families are grown per target order.
    """
    family = family or FamilyFilter()
    _check_order(n_max, family)
    n_min = max(n_min, 1)
    if family.regular_degree is None:
        for k, level in _grow(n_max, family, max_graphs, workers):
            if k >= n_min:
                yield from (g for g in level if family.accepts(g))
    else:
        for n in range(n_min, n_max + 1):
            yield from enumerate_connected(n, family, max_graphs, workers)


def random_regular(
    r: int,
    n: int,
    count: int,
    seed: int = 0,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> Iterator[Graph]:
    """Yield ``count`` connected r-regular graphs on n vertices.

    Uses the pairing model: ``r`` points per vertex are matched uniformly at
    random and the attempt restarts on a loop, a repeated edge or a
    disconnected result. The stream is a pure function of the arguments.
    """
    if r * n % 2:
        raise GenerationError(f"no {r}-regular graph on {n} vertices: r*n is odd")
    if not 0 <= r < n:
        raise GenerationError(f"regular degree must satisfy 0 <= r < n, got r={r}, n={n}")
    if r == 0 and n > 1:
        raise GenerationError("a 0-regular graph on more than one vertex is disconnected")

    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(r)]
    for index in range(count):
        for attempt in range(1, max_retries + 1):
            rng.shuffle(points)
            rows = [0] * n
            ok = True
            for u, v in zip(points[::2], points[1::2]):
                if u == v or rows[u] >> v & 1:
                    ok = False
                    break
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            if ok:
                g = Graph(n, tuple(rows))
                if is_connected(g):
                    logger.debug(
                        "random %d-regular graph %d on %d vertices after %d attempts",
                        r,
                        index,
                        n,
                        attempt,
                    )
                    yield g
                    break
        else:
            raise GenerationError(
                f"no connected {r}-regular graph on {n} vertices after "
                f"{max_retries} attempts"
            )


__all__ = [
    "DEFAULT_MAX_GRAPHS",
    "DEFAULT_MAX_RETRIES",
    "FamilyFilter",
    "enumerate_connected",
    "enumerate_connected_range",
    "random_regular",
]
