"""
    graphconj.conjecture
    ~~~~~~~~~~~~~~~~~~~~

    The conjecture language: an AST, a parser, a canonical formatter and an
    exact evaluator.

    A conjecture reads::

        name: HYPOTHESIS :: EXPR REL EXPR [sharp]

    where the hypothesis is a ``&``-joined list of atoms, ``REL`` is one of
    ``<=``, ``>=`` or ``=``, and expressions combine invariant keywords,
    integers and ``p/q`` literals with ``+ - * /``. The name and the
    ``[sharp]`` annotation are optional.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

import re
import token as tokenlib
import tokenize
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from importlib import resources
from io import StringIO
from tokenize import TokenInfo
from typing import Iterable, List, Optional, Tuple, Union

from .canon import is_isomorphic
from .compat import tokenizer
from .dsl_eval import _OP_PRIORITY, build_eval_tree, merge_rational_literals
from .errors import ConjectureSyntaxError, GraphError, UnknownIdentifierError
from .formats import parse_graph6
from .graph import Graph, is_triangle_free, named_graph, normalize_graph_name
from .util import SourceIterator, format_fraction

#: Expression keyword -> InvariantRecord field.
KEYWORDS = {
    "order": "n",
    "size": "m",
    "independence": "alpha",
    "matching": "mu",
    "min_maximal_matching": "mu_star",
    "independent_domination": "indep_dom",
    "domination": "dom",
    "zero_forcing": "zero_forcing",
    "annihilation": "annihilation",
    "residue": "residue",
    "harmonic": "harmonic",
    "max_degree": "max_deg",
    "min_degree": "min_deg",
}

#: Hypothesis atoms without argument.
FLAG_ATOMS = (
    "connected",
    "nontrivial",
    "regular",
    "cubic",
    "subcubic",
    "claw_free",
    "bipartite",
    "triangle_free",
    "konig_egervary",
)

#: Hypothesis atoms with one argument.
PARAM_ATOMS = ("r_regular", "not_iso")

#: Keywords that may be compared with a constant inside a hypothesis.
COMPARABLE = ("max_degree", "min_degree", "order")

RELATIONS = ("<=", ">=", "=")

_RELATION_ALIASES = {"<=": "<=", ">=": ">=", "=": "=", "==": "="}

_LITERAL_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


# Expressions


@dataclass(frozen=True)
class Const:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Ref:
    keyword: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Const, Ref, BinOp]


# Hypotheses


@dataclass(frozen=True)
class Atom:
    """A structural hypothesis such as ``connected`` or ``not_iso(K4)``."""

    name: str
    arg: Union[None, int, str] = None

    def __str__(self):
        return self.name if self.arg is None else f"{self.name}({self.arg})"


@dataclass(frozen=True)
class Comparison:
    """A hypothesis ``keyword op value``, e.g. ``max_degree <= 3``."""

    keyword: str
    op: str
    value: int

    def __str__(self):
        return f"{self.keyword} {self.op} {self.value}"


HypothesisAtom = Union[Atom, Comparison]
Hypothesis = Tuple[HypothesisAtom, ...]


@dataclass(frozen=True)
class Conjecture:
    name: str
    hypothesis: Hypothesis
    lhs: Expr
    relation: str
    rhs: Expr
    #: the statement claims that equality is attained
    sharp: bool = False

    @property
    def statement(self) -> str:
        """Hypothesis and inequality, without name or annotation."""
        hyp = " & ".join(str(atom) for atom in self.hypothesis)
        return (
            f"{hyp} :: {format_expr(self.lhs)} {self.relation} {format_expr(self.rhs)}"
        )

    def __str__(self):
        return format_conjecture(self)

    def keywords(self) -> List[str]:
        """Invariant keywords used by the inequality, left to right."""
        return _keywords(self.lhs) + _keywords(self.rhs)


def _keywords(e: Expr) -> List[str]:
    if isinstance(e, Ref):
        return [e.keyword]
    if isinstance(e, BinOp):
        return _keywords(e.left) + _keywords(e.right)
    return []


# Formatting


def _priority(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _OP_PRIORITY[e.op]
    if isinstance(e, Const) and e.value.denominator != 1:
        return 1
    return 3


def format_expr(e: Expr) -> str:
    if isinstance(e, Const):
        return format_fraction(e.value)
    if isinstance(e, Ref):
        return e.keyword
    prio = _priority(e)
    left, right = format_expr(e.left), format_expr(e.right)
    if _priority(e.left) < prio:
        left = f"({left})"
    if _priority(e.right) <= prio:
        right = f"({right})"
    return f"{left} {e.op} {right}"


def format_conjecture(c: Conjecture) -> str:
    """Canonical text of a conjecture; parsing it gives back an equal AST."""
    out = f"{c.name}: {c.statement}"
    return out + " [sharp]" if c.sharp else out


# Parsing


def _col(tok: TokenInfo) -> int:
    return tok.start[1] + 1


def _negate(x: Expr) -> Expr:
    if isinstance(x, Const):
        return Const(-x.value)
    return BinOp("*", Const(-1), x)


_AST_BINARY = {op: partial(BinOp, op) for op in ("+", "-", "*", "/")}
_AST_UNARY = {"+": lambda x: x, "-": _negate}


def _define(tok: TokenInfo) -> Expr:
    if tok.type == tokenlib.NUMBER:
        match = _LITERAL_RE.match(tok.string)
        if not match:
            raise ConjectureSyntaxError(
                f"'{tok.string}' is not an integer or a p/q literal", col=_col(tok)
            )
        num, den = int(match.group(1)), int(match.group(2) or 1)
        if den == 0:
            raise ConjectureSyntaxError(
                f"zero denominator in '{tok.string}'", col=_col(tok)
            )
        return Const(Fraction(num, den))
    if tok.string not in KEYWORDS:
        raise UnknownIdentifierError(tok.string, col=_col(tok))
    return Ref(tok.string)


def _parse_expr(tokens: List[TokenInfo], end: TokenInfo) -> Expr:
    tokens = merge_rational_literals(tokens) + [
        TokenInfo(tokenlib.ENDMARKER, "", end.start, end.start, end.line)
    ]
    tree = build_eval_tree(tokens)
    if tree is None:
        raise ConjectureSyntaxError("empty expression", col=_col(end))
    return tree.evaluate(_define, _AST_BINARY, _AST_UNARY)


def _split(tokens: List[TokenInfo], sep: str) -> List[List[TokenInfo]]:
    out: List[List[TokenInfo]] = [[]]
    for tok in tokens:
        if tok.type == tokenlib.OP and tok.string == sep:
            out.append([])
        else:
            out[-1].append(tok)
    return out


def _parse_atom(group: List[TokenInfo], text: str, at: TokenInfo) -> HypothesisAtom:
    if not group:
        raise ConjectureSyntaxError("empty hypothesis atom", col=_col(at))
    head = group[0]
    if head.type != tokenlib.NAME:
        raise ConjectureSyntaxError(
            f"expected a hypothesis atom, got '{head.string}'", col=_col(head)
        )
    name = head.string

    if len(group) == 1:
        if name in FLAG_ATOMS:
            return Atom(name)
        if name in PARAM_ATOMS:
            raise ConjectureSyntaxError(f"{name} needs one argument", col=_col(head))
        if name in KEYWORDS:
            raise ConjectureSyntaxError(
                f"{name} needs a comparison in a hypothesis", col=_col(head)
            )
        raise UnknownIdentifierError(name, col=_col(head))

    second = group[1]
    if second.string == "(":
        if group[-1].string != ")":
            raise ConjectureSyntaxError(
                f"unclosed argument list of {name}", col=_col(second)
            )
        if name in FLAG_ATOMS:
            raise ConjectureSyntaxError(f"{name} takes no argument", col=_col(second))
        if name not in PARAM_ATOMS:
            raise UnknownIdentifierError(name, col=_col(head))
        raw = text[second.end[1] : group[-1].start[1]].strip()
        if not raw:
            raise ConjectureSyntaxError(f"{name} needs one argument", col=_col(second))
        if name == "r_regular":
            if not raw.isdigit():
                raise ConjectureSyntaxError(
                    f"r_regular needs a natural number, got '{raw}'", col=_col(second)
                )
            return Atom(name, int(raw))
        try:
            named_graph(raw)
            return Atom(name, normalize_graph_name(raw))
        except GraphError as ex:
            raise ConjectureSyntaxError(str(ex), col=_col(second)) from None

    if len(group) == 3 and second.type == tokenlib.OP:
        if name not in COMPARABLE:
            if name in KEYWORDS or name in FLAG_ATOMS or name in PARAM_ATOMS:
                raise ConjectureSyntaxError(
                    f"only {', '.join(COMPARABLE)} can be compared in a hypothesis",
                    col=_col(head),
                )
            raise UnknownIdentifierError(name, col=_col(head))
        op = _RELATION_ALIASES.get(second.string)
        if op is None:
            raise ConjectureSyntaxError(
                f"unsupported comparison '{second.string}'", col=_col(second)
            )
        value = group[2]
        if value.type != tokenlib.NUMBER or not value.string.isdigit():
            raise ConjectureSyntaxError(
                f"expected a natural number, got '{value.string}'", col=_col(value)
            )
        return Comparison(name, op, int(value.string))

    raise ConjectureSyntaxError(
        f"cannot read hypothesis atom starting at '{name}'", col=_col(head)
    )


def _tokens(text: str) -> List[TokenInfo]:
    try:
        tokens = [t for t in tokenizer(text) if t.type != tokenlib.COMMENT]
    except ConjectureSyntaxError:
        raise
    except (tokenize.TokenError, SyntaxError) as ex:
        raise ConjectureSyntaxError(f"lexical error: {ex.args[0]}") from None
    for tok in tokens:
        if tok.type in (tokenlib.ERRORTOKEN, tokenlib.STRING) or (
            tok.type == tokenlib.OP and tok.string in ("!", "$", "?", "`")
        ):
            raise ConjectureSyntaxError(
                f"lexical error: unexpected '{tok.string}'", col=_col(tok)
            )
    return tokens


def _parse(text: str, default_name: str) -> Conjecture:
    tokens = _tokens(text)
    end = tokens[-1]

    name, i = default_name, 0
    if (
        len(tokens) >= 3
        and tokens[0].type == tokenlib.NAME
        and tokens[1].string == ":"
        and not (tokens[2].string == ":" and tokens[2].start == tokens[1].end)
    ):
        name, i = tokens[0].string, 2

    sep = None
    for j in range(i, len(tokens) - 1):
        first, second = tokens[j], tokens[j + 1]
        if first.string == ":" and second.string == ":" and first.end == second.start:
            sep = j
            break
    if sep is None:
        raise ConjectureSyntaxError(
            "expected '::' between hypothesis and inequality", col=_col(end)
        )

    hyp_tokens = tokens[i:sep]
    if not hyp_tokens:
        raise ConjectureSyntaxError("empty hypothesis", col=_col(tokens[sep]))
    hypothesis = tuple(
        _parse_atom(group, text, tokens[sep]) for group in _split(hyp_tokens, "&")
    )

    body = tokens[sep + 2 : -1]
    sharp = False
    if len(body) >= 3 and [t.string for t in body[-3:]] == ["[", "sharp", "]"]:
        sharp, body = True, body[:-3]
    for tok in body:
        if tok.string in ("[", "]"):
            raise ConjectureSyntaxError(
                "the only annotation is a trailing [sharp]", col=_col(tok)
            )

    depth, rel_index = 0, None
    for k, tok in enumerate(body):
        if tok.type != tokenlib.OP:
            continue
        if tok.string == "(":
            depth += 1
        elif tok.string == ")":
            depth -= 1
        elif tok.string in ("<", ">", "!=", "<>"):
            raise ConjectureSyntaxError(
                f"unsupported relation '{tok.string}'", col=_col(tok)
            )
        elif tok.string in _RELATION_ALIASES and depth == 0:
            if rel_index is not None:
                raise ConjectureSyntaxError(
                    "a conjecture has exactly one relation", col=_col(tok)
                )
            rel_index = k
    if rel_index is None:
        raise ConjectureSyntaxError(
            "expected one of <=, >= or = in the inequality", col=_col(end)
        )

    rel = body[rel_index]
    after = body[rel_index + 1 :]
    lhs = _parse_expr(body[:rel_index], rel)
    rhs = _parse_expr(after, end if not sharp else tokens[-4])
    return Conjecture(name, hypothesis, lhs, _RELATION_ALIASES[rel.string], rhs, sharp)


def parse_conjecture(
    text: str,
    *,
    default_name: str = "conjecture",
    lineno: Optional[int] = None,
    filename: Optional[str] = None,
) -> Conjecture:
    """Parse one conjecture.

    Errors are :class:`ConjectureSyntaxError` (or its subclass
    :class:`UnknownIdentifierError`) carrying line and column.
    """
    text = text.strip()
    if "\n" in text:
        raise ConjectureSyntaxError(
            "a conjecture fits on one line", lineno=lineno, filename=filename
        )
    try:
        return _parse(text, default_name)
    except ConjectureSyntaxError as ex:
        ex.lineno = lineno if lineno is not None else ex.lineno
        ex.filename = filename or ex.filename
        raise


def parse_conjecture_lines(
    lines: Iterable[str], filename: Optional[str] = None
) -> List[Conjecture]:
    """Parse a conjecture file: one per line, ``#`` comments and blanks skipped.

    Unnamed conjectures are called ``conjecture_<lineno>``.
    """
    out = []
    for lineno, line in SourceIterator(lines, filename):
        out.append(
            parse_conjecture(
                line,
                default_name=f"conjecture_{lineno}",
                lineno=lineno,
                filename=filename,
            )
        )
    return out


def parse_conjecture_file(path) -> List[Conjecture]:
    with open(path, encoding="utf-8") as fp:
        return parse_conjecture_lines(fp, str(path))


def _load_resource(name: str) -> List[Conjecture]:
    text = resources.read_binary(__package__, name).decode("utf-8")
    return parse_conjecture_lines(StringIO(text), name)


def builtin_conjectures() -> List[Conjecture]:
    """The four conjectures c1 .. c4 with the hypotheses the engine checks."""
    return _load_resource("builtin_conjectures.txt")


def appendix_conjectures() -> List[Conjecture]:
    """The same four conjectures with the hypotheses of their Lean listing."""
    return _load_resource("appendix_conjectures.txt")


# Evaluation


class _Undefined:
    """Value of an expression that divides by zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __reduce__(self):
        return _Undefined, ()


UNDEFINED = _Undefined()

Value = Union[Fraction, _Undefined]


def evaluate_expr(e: Expr, rec) -> Value:
    """Exact value of e on an InvariantRecord (or GraphInvariants).

    Division by zero anywhere gives :data:`UNDEFINED`.
    """
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Ref):
        return Fraction(getattr(rec, KEYWORDS[e.keyword]))
    left = evaluate_expr(e.left, rec)
    if left is UNDEFINED:
        return UNDEFINED
    right = evaluate_expr(e.right, rec)
    if right is UNDEFINED:
        return UNDEFINED
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    if right == 0:
        return UNDEFINED
    return left / right


def compare(lhs: Fraction, relation: str, rhs: Fraction) -> bool:
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    return lhs == rhs


@lru_cache(maxsize=None)
def _named(name: str) -> Graph:
    return named_graph(name)


def _graph_of(rec) -> Graph:
    g = getattr(rec, "graph", None)
    return g if g is not None else parse_graph6(rec.graph6)


def _cost(atom: HypothesisAtom) -> int:
    if isinstance(atom, Comparison):
        return 0
    if atom.name in ("nontrivial", "regular", "cubic", "subcubic", "r_regular"):
        return 0
    if atom.name == "not_iso":
        return 2
    if atom.name == "konig_egervary":
        return 3
    return 1


def _holds(atom: HypothesisAtom, rec) -> bool:
    if isinstance(atom, Comparison):
        return compare(getattr(rec, KEYWORDS[atom.keyword]), atom.op, atom.value)
    name = atom.name
    if name == "nontrivial":
        return rec.n >= 2
    if name == "regular":
        return rec.max_deg == rec.min_deg
    if name == "cubic":
        return rec.max_deg == rec.min_deg == 3
    if name == "subcubic":
        return rec.max_deg <= 3
    if name == "r_regular":
        return rec.max_deg == rec.min_deg == atom.arg
    if name == "not_iso":
        return not is_isomorphic(_graph_of(rec), _named(atom.arg))
    if name == "triangle_free" and not hasattr(rec, "triangle_free"):
        return is_triangle_free(_graph_of(rec))
    return bool(getattr(rec, name))


def evaluate_hypothesis(hypothesis: Hypothesis, rec) -> bool:
    """True iff every atom holds; cheap atoms are checked first."""
    return all(_holds(atom, rec) for atom in sorted(hypothesis, key=_cost))
