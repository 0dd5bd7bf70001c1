"""
    graphconj
    ~~~~~~~~~

    GraphConj computes exact invariants of small simple graphs, states
    conjectures relating them in a small language, checks the conjectures
    over files or exhaustive enumerations, and exports them as Lean 4
    theorem statements.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from importlib.metadata import version

from .canon import canonical_form, is_isomorphic
from .conjecture import (
    UNDEFINED,
    Conjecture,
    builtin_conjectures,
    evaluate_expr,
    evaluate_hypothesis,
    format_conjecture,
    parse_conjecture,
    parse_conjecture_file,
)
from .engine import (
    ConjectureReport,
    Outcome,
    check_dataset,
    check_graph,
    hunt,
    mine_sharp,
    regression_theorems,
)
from .enumeration import (
    FamilyFilter,
    enumerate_connected,
    enumerate_connected_range,
    random_regular,
)
from .errors import (  # noqa: F401
    ConjectureSyntaxError,
    EnumerationBudgetError,
    GenerationError,
    GraphConjError,
    GraphError,
    GraphFormatError,
    GraphSizeError,
    InvariantError,
    UnknownIdentifierError,
    UnmappedIdentifierError,
)
from .formats import parse_edge_list, parse_graph6, read_graphs, write_graph6
from .graph import DegreeSequence, Graph, line_graph, named_graph
from .invariants import GraphInvariants, InvariantRecord, invariant_record
from .lean import emit_builtin_four, emit_lean
from .util import logger  # noqa: F401

try:  # pragma: no cover
    __version__ = version("graphconj")
except Exception:  # pragma: no cover
    # we seem to have a local copy not installed without setuptools
    # so the reported version will be unknown
    __version__ = "unknown"


def test():
    """Run all tests.

    Returns
    -------
    unittest.TestResult
    """
    from .testsuite import run

    return run()


__all__ = (
    "Conjecture",
    "ConjectureReport",
    "ConjectureSyntaxError",
    "DegreeSequence",
    "EnumerationBudgetError",
    "FamilyFilter",
    "GenerationError",
    "Graph",
    "GraphConjError",
    "GraphError",
    "GraphFormatError",
    "GraphInvariants",
    "GraphSizeError",
    "InvariantError",
    "InvariantRecord",
    "Outcome",
    "UNDEFINED",
    "UnknownIdentifierError",
    "UnmappedIdentifierError",
    "builtin_conjectures",
    "canonical_form",
    "check_dataset",
    "check_graph",
    "emit_builtin_four",
    "emit_lean",
    "enumerate_connected",
    "enumerate_connected_range",
    "evaluate_expr",
    "evaluate_hypothesis",
    "format_conjecture",
    "hunt",
    "invariant_record",
    "is_isomorphic",
    "line_graph",
    "mine_sharp",
    "named_graph",
    "parse_conjecture",
    "parse_conjecture_file",
    "parse_edge_list",
    "parse_graph6",
    "random_regular",
    "read_graphs",
    "regression_theorems",
    "write_graph6",
    "__version__",
)
