"""
    graphconj.engine
    ~~~~~~~~~~~~~~~~

    Checks conjectures against graphs: per-graph outcomes, dataset reports,
    exhaustive hunts over enumerated families and sharp-example mining.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial
from itertools import islice
from typing import Dict, Iterator, List, Optional, Tuple

from ._typing import GraphSource
from .conjecture import (
    UNDEFINED,
    Conjecture,
    compare,
    evaluate_expr,
    evaluate_hypothesis,
    parse_conjecture,
)
from .enumeration import DEFAULT_MAX_GRAPHS, FamilyFilter, enumerate_connected_range
from .formats import write_graph6
from .graph import Graph
from .invariants import GraphInvariants
from .util import format_fraction, logger, parallel_map

#: Version of the JSON report layout.
SCHEMA_VERSION = 1

#: Graphs handed to the worker pool at a time.
CHUNK_SIZE = 4096


class Outcome(enum.Enum):
    HYPOTHESIS_NOT_MET = "hypothesis_not_met"
    HOLDS_STRICT = "holds_strict"
    HOLDS_EQUAL = "holds_equal"
    FAILS = "fails"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class GraphCheck:
    """Outcome of one conjecture on one graph, with both sides when evaluated."""

    outcome: Outcome
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None


@dataclass(frozen=True)
class Witness:
    """A graph with the values both sides of a conjecture take on it."""

    graph6: str
    graph_id: str
    lhs: str
    rhs: str


@dataclass
class ConjectureReport:
    name: str
    statement: str
    dataset: str
    totals: Dict[str, int]
    touch_number: int = 0
    counterexamples: List[Witness] = field(default_factory=list)
    touch_set: List[str] = field(default_factory=list)
    undefined: List[str] = field(default_factory=list)
    scanned: int = 0
    sharp_claim: bool = False
    sharp_confirmed: bool = False
    schema: int = SCHEMA_VERSION

    @property
    def fails(self) -> int:
        return self.totals[Outcome.FAILS.value]

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> ConjectureReport:
        data = dict(data)
        data["counterexamples"] = [Witness(**w) for w in data["counterexamples"]]
        return cls(**data)


def _evaluate(c: Conjecture, g: Graph, rec=None) -> GraphCheck:
    rec = rec if rec is not None else GraphInvariants(g)
    if not evaluate_hypothesis(c.hypothesis, rec):
        return GraphCheck(Outcome.HYPOTHESIS_NOT_MET)
    lhs = evaluate_expr(c.lhs, rec)
    rhs = UNDEFINED if lhs is UNDEFINED else evaluate_expr(c.rhs, rec)
    if lhs is UNDEFINED or rhs is UNDEFINED:
        return GraphCheck(Outcome.UNDEFINED)
    if not compare(lhs, c.relation, rhs):
        return GraphCheck(Outcome.FAILS, lhs, rhs)
    if lhs == rhs:
        return GraphCheck(Outcome.HOLDS_EQUAL, lhs, rhs)
    return GraphCheck(Outcome.HOLDS_STRICT, lhs, rhs)


def check_graph(c: Conjecture, g: Graph, rec=None) -> Outcome:
    """Outcome of c on g.

    The hypothesis is evaluated first, cheap atoms before expensive ones,
    so graphs outside the hypothesis never pay for the inequality.
    ``rec`` may be an InvariantRecord (or GraphInvariants) already known
    for g.
    """
    return _evaluate(c, g, rec).outcome


def _check_item(c: Conjecture, item: Tuple[str, Graph]) -> GraphCheck:
    return _evaluate(c, item[1])


def _identified(graphs: GraphSource) -> Iterator[Tuple[str, Graph]]:
    for item in graphs:
        if isinstance(item, Graph):
            yield write_graph6(item), item
        else:
            yield item


def scan(
    c: Conjecture, graphs: GraphSource, workers: int = 1
) -> Iterator[Tuple[str, Graph, GraphCheck]]:
    """Yield ``(graph id, graph, check)`` in input order.

    Graphs are consumed lazily in chunks, so a caller can stop early.
    """
    source = _identified(graphs)
    check = partial(_check_item, c)
    while True:
        chunk = list(islice(source, CHUNK_SIZE))
        if not chunk:
            return
        for (graph_id, g), result in zip(chunk, parallel_map(check, chunk, workers)):
            yield graph_id, g, result


def _witness(graph_id: str, g: Graph, result: GraphCheck) -> Witness:
    return Witness(
        write_graph6(g),
        graph_id,
        format_fraction(result.lhs),
        format_fraction(result.rhs),
    )


def check_dataset(
    c: Conjecture,
    graphs: GraphSource,
    dataset: str = "",
    workers: int = 1,
    stop_first: bool = False,
) -> ConjectureReport:
    """Aggregate the outcomes of c over a graph stream.

    Lists keep input order. With ``stop_first`` the scan ends at the first
    failure, and ``scanned`` tells how many graphs were examined.
    """
    report = ConjectureReport(
        name=c.name,
        statement=c.statement,
        dataset=dataset,
        totals={outcome.value: 0 for outcome in Outcome},
        sharp_claim=c.sharp,
    )
    for graph_id, g, result in scan(c, graphs, workers):
        report.scanned += 1
        report.totals[result.outcome.value] += 1
        if result.outcome is Outcome.HOLDS_EQUAL:
            report.touch_set.append(write_graph6(g))
        elif result.outcome is Outcome.UNDEFINED:
            report.undefined.append(write_graph6(g))
        elif result.outcome is Outcome.FAILS:
            witness = _witness(graph_id, g, result)
            report.counterexamples.append(witness)
            logger.info(
                "%s fails on %s: %s vs %s", c.name, graph_id, witness.lhs, witness.rhs
            )
            if stop_first:
                break

    report.touch_number = len(report.touch_set)
    report.sharp_confirmed = c.sharp and report.touch_number > 0
    if report.undefined:
        logger.warning(
            "%s is undefined (division by zero) on %d graphs",
            c.name,
            len(report.undefined),
        )
    return report


def hunt(
    c: Conjecture,
    n_max: int,
    family: Optional[FamilyFilter] = None,
    stop_first: bool = False,
    n_min: int = 2,
    workers: int = 1,
    max_graphs: int = DEFAULT_MAX_GRAPHS,
) -> ConjectureReport:
    """Check c on every connected graph of the family with n_min <= n <= n_max.

    Graphs are enumerated lazily, smallest order first.
    """
    family = family or FamilyFilter()
    dataset = f"connected {family} graphs, {n_min} <= n <= {n_max}"
    logger.info("hunting %s over %s", c.name, dataset)
    graphs = enumerate_connected_range(n_min, n_max, family, max_graphs, workers)
    report = check_dataset(c, graphs, dataset, workers, stop_first)
    logger.info(
        "hunt of %s done: %d graphs scanned, %d failures",
        c.name,
        report.scanned,
        report.fails,
    )
    return report


def mine_sharp(
    c: Conjecture, graphs: GraphSource, workers: int = 1
) -> List[Witness]:
    """Every graph on which c holds with equality, with the common value."""
    return [
        _witness(graph_id, g, result)
        for graph_id, g, result in scan(c, graphs, workers)
        if result.outcome is Outcome.HOLDS_EQUAL
    ]


_REGRESSION_THEOREMS = (
    ("alpha_le_matching: connected & regular & nontrivial :: independence <= matching", "all"),
    (
        "zero_forcing_le_twice_domination: connected & cubic & not_iso(K4) :: "
        "zero_forcing <= 2 * domination",
        "cubic",
    ),
    ("alpha_le_annihilation: connected :: independence <= annihilation", "all"),
    ("alpha_ge_residue: connected :: independence >= residue", "all"),
    (
        "zero_forcing_le_domination_plus_two: connected & cubic & claw_free :: "
        "zero_forcing <= domination + 2",
        "cubic+claw_free",
    ),
)


def regression_theorems() -> List[Tuple[Conjecture, FamilyFilter]]:
    """Proven inequalities with the family they are run on.

    Any failure on these signals an implementation bug.
    """
    return [
        (parse_conjecture(text), FamilyFilter.from_string(family))
        for text, family in _REGRESSION_THEOREMS
    ]
