"""
    graphconj.cli
    ~~~~~~~~~~~~~

    The ``graphconj`` command line: invariant tables, conjecture checks,
    hunts, sharp-example mining, enumeration, Lean export and plot data.

    Exit codes: 0 verified, 1 counterexample found, 2 usage or I/O error.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Sequence, Tuple

from .canon import canonical_form
from .conjecture import (
    KEYWORDS,
    Conjecture,
    Ref,
    appendix_conjectures,
    builtin_conjectures,
    evaluate_expr,
    parse_conjecture_file,
)
from .engine import check_dataset, hunt, mine_sharp
from .enumeration import (
    FamilyFilter,
    enumerate_connected_range,
    random_regular,
)
from .errors import GraphConjError
from .formats import read_graphs, write_graph6
from .graph import Graph
from .invariants import GraphInvariants, invariant_record
from .lean import BUILTIN_THEOREM_NAMES, emit_builtin_four, emit_lean_many
from .util import logger, parallel_map

WORKERS_ENV = "GRAPHCONJ_WORKERS"

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

INVARIANT_COLUMNS = (
    "id",
    "graph6",
    "n",
    "m",
    "alpha",
    "mu",
    "mu_star",
    "indep_dom",
    "dom",
    "zero_forcing",
    "annihilation",
    "residue",
    "harmonic_num",
    "harmonic_den",
    "max_deg",
    "min_deg",
    "connected",
    "bipartite",
    "claw_free",
    "regular_r",
    "konig_egervary",
)

PLOT_COLUMNS = ("graph6", "x_num", "x_den", "y_num", "y_den", "equality")

SHARP_COLUMNS = ("conjecture", "graph6", "id", "lhs", "rhs")


class UsageError(GraphConjError):
    """Raised for inconsistent command line options."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: Tuple[str, ...] = ()
    fmt: str = "graph6"
    family: FamilyFilter = FamilyFilter()
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    random: Optional[Tuple[int, int, int]] = None
    conjecture_file: Optional[str] = None
    builtin: Optional[str] = None
    out: Optional[str] = None
    report: Optional[str] = None
    stop_first: bool = False
    workers: int = 1
    seed: int = 0
    x: str = "harmonic"
    y: str = "min_maximal_matching"
    lean_form: str = "appendix"

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError(f"worker count must be >= 1, not {self.workers}")
        sources = sum(
            (bool(self.inputs), self.n_max is not None, self.random is not None)
        )
        if self.command not in ("lean", "enumerate", "hunt") and sources != 1:
            raise UsageError("give exactly one input: --in, --max-n or --random")
        if self.conjecture_file and self.builtin:
            raise UsageError("--conjecture and --builtin exclude each other")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        workers = args.workers
        if workers is None:
            env = os.environ.get(WORKERS_ENV, "1")
            try:
                workers = int(env)
            except ValueError:
                raise UsageError(f"{WORKERS_ENV}={env!r} is not an integer") from None
        random = None
        if getattr(args, "random", None):
            try:
                r, n, count = (int(x) for x in args.random.split(","))
            except ValueError:
                raise UsageError(
                    f"--random expects R,N,COUNT, got '{args.random}'"
                ) from None
            random = (r, n, count)
        return cls(
            command=args.command,
            inputs=tuple(getattr(args, "inputs", None) or ()),
            fmt=getattr(args, "format", "graph6"),
            family=FamilyFilter.from_string(getattr(args, "family", "all")),
            n_min=getattr(args, "min_n", None),
            n_max=getattr(args, "max_n", None),
            random=random,
            conjecture_file=getattr(args, "conjecture", None),
            builtin=getattr(args, "builtin", None),
            out=getattr(args, "out", None),
            report=getattr(args, "report", None),
            stop_first=getattr(args, "stop_first", False),
            workers=workers,
            seed=getattr(args, "seed", 0),
            x=getattr(args, "x", "harmonic"),
            y=getattr(args, "y", "min_maximal_matching"),
            lean_form=getattr(args, "form", "appendix"),
        )


# Inputs


def load_graphs(cfg: RunConfig, default_n_min: int = 1) -> List[Tuple[str, Graph]]:
    """The run's graphs as ``(id, graph)`` pairs, in source order."""
    if cfg.inputs:
        out = []
        for path in cfg.inputs:
            out.extend(read_graphs(path, cfg.fmt))
        return out
    if cfg.random is not None:
        r, n, count = cfg.random
        return [
            (f"random:{i}", g)
            for i, g in enumerate(random_regular(r, n, count, cfg.seed))
        ]
    n_min = cfg.n_min if cfg.n_min is not None else default_n_min
    return [
        (write_graph6(g), g)
        for g in enumerate_connected_range(
            n_min, cfg.n_max, cfg.family, workers=cfg.workers
        )
    ]


def load_conjectures(cfg: RunConfig) -> List[Conjecture]:
    if cfg.conjecture_file:
        conjectures = parse_conjecture_file(cfg.conjecture_file)
        if not conjectures:
            raise UsageError(f"no conjecture in {cfg.conjecture_file}")
        return conjectures
    builtins = builtin_conjectures()
    if cfg.builtin in (None, "all"):
        return builtins
    return [builtins[int(cfg.builtin) - 1]]


def _sort_key(item: Tuple[str, Graph]):
    g = item[1]
    return g.n, canonical_form(g)


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fp:
            yield fp


def _csv_writer(fp):
    return csv.writer(fp, lineterminator="\n")


def _flag(value: bool) -> str:
    return "true" if value else "false"


# Commands


def _record(item: Tuple[str, Graph]):
    return invariant_record(item[1], item[0])


def cmd_invariants(cfg: RunConfig) -> int:
    items = sorted(load_graphs(cfg), key=_sort_key)
    records = parallel_map(_record, items, cfg.workers)
    with _output(cfg.out) as fp:
        writer = _csv_writer(fp)
        writer.writerow(INVARIANT_COLUMNS)
        for rec in records:
            writer.writerow(
                (
                    rec.graph_id,
                    rec.graph6,
                    rec.n,
                    rec.m,
                    rec.alpha,
                    rec.mu,
                    rec.mu_star,
                    rec.indep_dom,
                    rec.dom,
                    rec.zero_forcing,
                    rec.annihilation,
                    rec.residue,
                    rec.harmonic.numerator,
                    rec.harmonic.denominator,
                    rec.max_deg,
                    rec.min_deg,
                    _flag(rec.connected),
                    _flag(rec.bipartite),
                    _flag(rec.claw_free),
                    "" if rec.regular is None else rec.regular,
                    _flag(rec.konig_egervary),
                )
            )
    return EXIT_OK


def _write_reports(cfg: RunConfig, reports) -> int:
    for report in reports:
        print(
            f"{report.name}: {report.scanned} graphs, {report.fails} failures, "
            f"touch number {report.touch_number}"
        )
    if cfg.report:
        data = [report.to_dict() for report in reports]
        with open(cfg.report, "w", encoding="utf-8") as fp:
            json.dump(data[0] if len(data) == 1 else data, fp, indent=2, ensure_ascii=False)
            fp.write("\n")
    return EXIT_COUNTEREXAMPLE if any(r.fails for r in reports) else EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    conjectures = load_conjectures(cfg)
    graphs = load_graphs(cfg)
    dataset = ", ".join(cfg.inputs) or (
        f"connected {cfg.family} graphs, n <= {cfg.n_max}"
        if cfg.n_max is not None
        else f"random regular {cfg.random} seed {cfg.seed}"
    )
    reports = [
        check_dataset(c, graphs, dataset, cfg.workers, cfg.stop_first)
        for c in conjectures
    ]
    return _write_reports(cfg, reports)


def cmd_hunt(cfg: RunConfig) -> int:
    if cfg.n_max is None:
        raise UsageError("hunt needs --max-n")
    conjectures = load_conjectures(cfg)
    n_min = cfg.n_min if cfg.n_min is not None else 2
    reports = [
        hunt(c, cfg.n_max, cfg.family, cfg.stop_first, n_min, cfg.workers)
        for c in conjectures
    ]
    return _write_reports(cfg, reports)


def cmd_sharp(cfg: RunConfig) -> int:
    conjectures = load_conjectures(cfg)
    items = sorted(load_graphs(cfg), key=_sort_key)
    with _output(cfg.out) as fp:
        writer = _csv_writer(fp)
        writer.writerow(SHARP_COLUMNS)
        for c in conjectures:
            for w in mine_sharp(c, items, cfg.workers):
                writer.writerow((c.name, w.graph6, w.graph_id, w.lhs, w.rhs))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    if cfg.random is not None:
        r, n, count = cfg.random
        graphs = random_regular(r, n, count, cfg.seed)
    elif cfg.n_max is not None:
        n_min = cfg.n_min if cfg.n_min is not None else cfg.n_max
        graphs = enumerate_connected_range(
            n_min, cfg.n_max, cfg.family, workers=cfg.workers
        )
    else:
        raise UsageError("enumerate needs --max-n or --random")
    with _output(cfg.out) as fp:
        for g in graphs:
            fp.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_lean(cfg: RunConfig) -> int:
    if cfg.conjecture_file:
        text = emit_lean_many((c, None) for c in load_conjectures(cfg))
    elif cfg.builtin in (None, "all"):
        text = emit_builtin_four(cfg.lean_form)
    else:
        if cfg.lean_form == "verified":
            conjectures = builtin_conjectures()
        else:
            conjectures = appendix_conjectures()
        index = int(cfg.builtin) - 1
        text = emit_lean_many([(conjectures[index], BUILTIN_THEOREM_NAMES[index])])
    with _output(cfg.out) as fp:
        fp.write(text)
    return EXIT_OK


def _point(keywords: Tuple[str, str], item: Tuple[str, Graph]):
    inv = GraphInvariants(item[1], item[0])
    return inv.graph6, tuple(evaluate_expr(Ref(k), inv) for k in keywords)


def cmd_plot_data(cfg: RunConfig) -> int:
    for keyword in (cfg.x, cfg.y):
        if keyword not in KEYWORDS:
            raise UsageError(
                f"unknown invariant '{keyword}'; choose from {', '.join(KEYWORDS)}"
            )
    items = sorted(load_graphs(cfg), key=_sort_key)
    points = parallel_map(partial(_point, (cfg.x, cfg.y)), items, cfg.workers)
    with _output(cfg.out) as fp:
        writer = _csv_writer(fp)
        writer.writerow(PLOT_COLUMNS)
        for graph6, (x, y) in points:
            writer.writerow(
                (
                    graph6,
                    x.numerator,
                    x.denominator,
                    y.numerator,
                    y.denominator,
                    _flag(x == y),
                )
            )
    return EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "check": cmd_check,
    "hunt": cmd_hunt,
    "sharp": cmd_sharp,
    "enumerate": cmd_enumerate,
    "lean": cmd_lean,
    "plot-data": cmd_plot_data,
}


# Parser


def _add_source(parser: argparse.ArgumentParser, default_family: str = "all"):
    parser.add_argument(
        "--in",
        dest="inputs",
        action="append",
        metavar="PATH",
        help="graph file (repeatable)",
    )
    parser.add_argument(
        "--format", choices=("graph6", "edgelist"), default="graph6"
    )
    parser.add_argument(
        "--family",
        default=default_family,
        help="all, cubic, subcubic, regular(R), claw_free or a '+' combination",
    )
    parser.add_argument("--max-n", type=int, help="enumerate graphs up to this order")
    parser.add_argument("--min-n", type=int, help="smallest enumerated order")
    parser.add_argument(
        "--random",
        metavar="R,N,COUNT",
        help="COUNT random connected R-regular graphs on N vertices",
    )
    parser.add_argument("--seed", type=int, default=0)


def _add_conjecture(parser: argparse.ArgumentParser):
    parser.add_argument("--conjecture", metavar="FILE", help="conjecture file")
    parser.add_argument(
        "--builtin", choices=("1", "2", "3", "4", "all"), help="built-in conjecture"
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--workers", type=int, help=f"worker processes (default ${WORKERS_ENV} or 1)"
    )
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="graphconj",
        description="Check graph conjectures over exact invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="CSV table of invariants")
    _add_source(p)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("check", parents=[common], help="check conjectures on graphs")
    _add_source(p)
    _add_conjecture(p)
    p.add_argument("--report", metavar="PATH", help="JSON report")
    p.add_argument("--stop-first", action="store_true")

    p = sub.add_parser("hunt", parents=[common], help="exhaustive counterexample hunt")
    p.add_argument("--family", default="all")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int)
    _add_conjecture(p)
    p.add_argument("--report", metavar="PATH", help="JSON report")
    p.add_argument("--stop-first", action="store_true")

    p = sub.add_parser("sharp", parents=[common], help="graphs attaining equality")
    _add_source(p)
    _add_conjecture(p)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("enumerate", parents=[common], help="graph6 lines of a family")
    p.add_argument("--family", default="all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int, help="default: --max-n")
    p.add_argument("--random", metavar="R,N,COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("lean", parents=[common], help="Lean 4 statements")
    _add_conjecture(p)
    p.add_argument("--form", choices=("appendix", "verified"), default="appendix")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("plot-data", parents=[common], help="CSV of two invariants")
    _add_source(p)
    p.add_argument("--x", default="harmonic")
    p.add_argument("--y", default="min_maximal_matching")
    p.add_argument("--out", metavar="PATH")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )

    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (GraphConjError, OSError, ValueError) as ex:
        logger.debug("command failed", exc_info=True)
        print(f"graphconj: error: {ex}", file=sys.stderr)
        return EXIT_USAGE
