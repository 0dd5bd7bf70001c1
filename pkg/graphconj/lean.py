"""
    graphconj.lean
    ~~~~~~~~~~~~~~

    Lean 4 theorem statements (with ``sorry`` bodies) for conjectures.

    Invariants are emitted as opaque functions applied to a fixed
    ``G : SimpleGraph V``; no definition is generated for them.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .conjecture import (
    Atom,
    BinOp,
    Comparison,
    Conjecture,
    Const,
    Expr,
    Ref,
    appendix_conjectures,
    builtin_conjectures,
)
from .errors import UnmappedIdentifierError

#: DSL invariant keyword -> Lean identifier.
LEAN_IDENTIFIERS = {
    "order": "order",
    "size": "size",
    "independence": "independence_number",
    "matching": "matching_number",
    "min_maximal_matching": "min_maximal_matching_number",
    "independent_domination": "independent_domination_number",
    "domination": "domination_number",
    "zero_forcing": "zero_forcing_number",
    "annihilation": "annihilation_number",
    "residue": "residue",
    "harmonic": "harmonic_index",
    "max_degree": "max_degree",
    "min_degree": "min_degree",
}

#: Structural atoms emitted as a predicate applied to G.
LEAN_PREDICATES = {
    "connected": "connected",
    "claw_free": "claw_free",
    "bipartite": "bipartite",
    "triangle_free": "triangle_free",
    "konig_egervary": "konig_egervary",
}

LEAN_RELATIONS = {"<=": "≤", ">=": "≥", "=": "="}

#: Markup found in typeset listings and its Lean operator.
NORMALIZATION = (
    (r"$\geq$", "≥"),
    (r"$\ge$", "≥"),
    (r"$\leq$", "≤"),
    (r"$\le$", "≤"),
    (r"$\neq$", "≠"),
    (r"$\ne$", "≠"),
)

NONTRIVIAL_NOTE = (
    "/-- Nontrivial: order at least 2 (an order ≥ 1 hypothesis admits K1, "
    "where max_degree G = 0). -/"
)

#: Theorem names of the four built-in conjectures, in order.
BUILTIN_THEOREM_NAMES = (
    "conjecture_one",
    "conjecture_two",
    "conjecture_three",
    "conjecture_four",
)


def normalize_listing(text: str) -> str:
    """Replace typeset operators by Lean ones and strip trailing blanks."""
    for markup, op in NORMALIZATION:
        text = text.replace(markup, op)
    lines = [line.rstrip() for line in text.strip("\n").splitlines()]
    return "\n".join(lines) + "\n"


def _identifier(keyword: str) -> str:
    try:
        return LEAN_IDENTIFIERS[keyword]
    except KeyError:
        raise UnmappedIdentifierError(keyword) from None


def _const(value: Fraction) -> str:
    if value.denominator != 1:
        return f"({value.numerator} / {value.denominator})"
    if value < 0:
        return f"({value.numerator})"
    return str(value.numerator)


def _priority(e: Expr) -> int:
    if isinstance(e, BinOp) and e.op != "/":
        return 0 if e.op in "+-" else 1
    return 3


def lean_expr(e: Expr) -> str:
    """Lean text of an expression; every division is parenthesized."""
    if isinstance(e, Const):
        return _const(e.value)
    if isinstance(e, Ref):
        return f"{_identifier(e.keyword)} G"
    prio = 1 if e.op in "*/" else 0
    left, right = lean_expr(e.left), lean_expr(e.right)
    if _priority(e.left) < prio:
        left = f"({left})"
    if _priority(e.right) <= prio:
        right = f"({right})"
    out = f"{left} {e.op} {right}"
    return f"({out})" if e.op == "/" else out


def lean_hypotheses(atom) -> List[str]:
    """Lean propositions for one hypothesis atom (``cubic`` gives two)."""
    if isinstance(atom, Comparison):
        return [f"{_identifier(atom.keyword)} G {LEAN_RELATIONS[atom.op]} {atom.value}"]
    name = atom.name
    if name in LEAN_PREDICATES:
        return [f"{LEAN_PREDICATES[name]} G"]
    if name == "nontrivial":
        return ["order G ≥ 2"]
    if name == "regular":
        return ["max_degree G = min_degree G"]
    if name in ("cubic", "r_regular"):
        r = 3 if name == "cubic" else atom.arg
        return ["max_degree G = min_degree G", f"max_degree G = {r}"]
    if name == "subcubic":
        return ["max_degree G ≤ 3"]
    if name == "not_iso":
        return [f"G ≠ {atom.arg}"]
    raise UnmappedIdentifierError(str(atom))


def emit_lean(c: Conjecture, name: Optional[str] = None) -> str:
    """One ``theorem`` block for c, hypotheses h1 .. hk in atom order."""
    name = name or c.name
    hypotheses = [h for atom in c.hypothesis for h in lean_hypotheses(atom)]
    conclusion = (
        f"{lean_expr(c.lhs)} {LEAN_RELATIONS[c.relation]} {lean_expr(c.rhs)}"
    )

    lines = []
    if any(isinstance(a, Atom) and a.name == "nontrivial" for a in c.hypothesis):
        lines.append(NONTRIVIAL_NOTE)
    header = f"theorem {name} (G : SimpleGraph V)"
    if not hypotheses:
        lines.append(f"{header} : {conclusion} :=")
    else:
        lines.append(header)
        lines += [f"    (h{i} : {h})" for i, h in enumerate(hypotheses, 1)]
        lines[-1] += f" : {conclusion} :="
    lines.append("sorry")
    return "\n".join(lines)


def emit_lean_many(items: Iterable[Tuple[Conjecture, Optional[str]]]) -> str:
    """Blocks separated by a blank line, with a final newline."""
    return "\n\n".join(emit_lean(c, name) for c, name in items) + "\n"


def emit_builtin_four(form: str = "appendix") -> str:
    """The four conjectures as Lean statements.

    ``appendix`` reproduces the published listing (order ≥ 1 hypotheses);
    ``verified`` uses the hypotheses the engine checks.
    """
    if form == "appendix":
        conjectures = appendix_conjectures()
    elif form == "verified":
        conjectures = builtin_conjectures()
    else:
        raise ValueError(f"unknown Lean form '{form}'; use appendix or verified")
    return emit_lean_many(zip(conjectures, BUILTIN_THEOREM_NAMES))
