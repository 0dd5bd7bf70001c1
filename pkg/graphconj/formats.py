"""
    graphconj.formats
    ~~~~~~~~~~~~~~~~~

    Readers and writers for the graph6 interchange format and for plain
    edge lists.

    graph6 packs the upper triangle of the adjacency matrix column by
    column (bit ``x[i][j]`` for ``i < j``, ``j`` ascending) into 6-bit
    groups stored as bytes ``63 .. 126``, after a header encoding ``n``.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

import pathlib
import re
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from .errors import GraphFormatError
from .graph import MAX_VERTICES, Graph
from .util import SourceIterator, logger

GRAPH6_HEADER = ">>graph6<<"

_BASE_RE = re.compile(r"^#\s*base\s*=\s*(\d+)\s*$")
_ORDER_RE = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")


def _triangle_bits(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Decode one graph6 line.

    Errors report the byte offset of the offending byte (0-based, counted
    after an optional ``>>graph6<<`` header).
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise GraphFormatError("empty graph6 line", offset=0)
    for offset, char in enumerate(line):
        if not 63 <= ord(char) <= 126:
            raise GraphFormatError(
                f"character {char!r} is outside the graph6 range 63..126",
                offset=offset,
            )
    data = line.encode("ascii")

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    elif len(data) >= 8 and data[1] == 126:
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        pos = 8
    else:
        raise GraphFormatError("truncated graph6 size header", offset=len(data))

    if n < 1:
        raise GraphFormatError("graph6 header encodes an empty graph", offset=0)
    if n > MAX_VERTICES:
        raise GraphFormatError(
            f"graph has {n} vertices, more than the supported {MAX_VERTICES}",
            offset=0,
        )

    nbits = _triangle_bits(n)
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit body: expected {nbytes} bytes, found {len(body)}",
            offset=len(data),
        )
    if len(body) > nbytes:
        raise GraphFormatError(
            f"{len(body) - nbytes} unexpected trailing bytes", offset=pos + nbytes
        )

    value = 0
    for byte in body:
        value = (value << 6) | (byte - 63)
    padding = nbytes * 6 - nbits
    if value & ((1 << padding) - 1):
        raise GraphFormatError(
            "nonzero padding bits", offset=pos + nbytes - 1 if nbytes else pos
        )
    value >>= padding

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (without header or newline)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]

    nbits = _triangle_bits(n)
    value = 0
    for j in range(1, n):
        column = g.adj[j]
        for i in range(j):
            value = (value << 1) | (column >> i & 1)
    nbytes = (nbits + 5) // 6
    value <<= nbytes * 6 - nbits
    for shift in range((nbytes - 1) * 6, -1, -6):
        out.append(63 + (value >> shift & 63))
    return bytes(out).decode("ascii")


def read_graph6_lines(
    lines: Iterable[str], filename: Optional[str] = None
) -> Iterator[Tuple[int, Graph]]:
    """Yield ``(lineno, graph)`` for every graph6 line, skipping blanks and comments."""
    for lineno, line in SourceIterator(lines, filename):
        try:
            yield lineno, parse_graph6(line)
        except GraphFormatError as ex:
            ex.filename = ex.filename or filename
            ex.lineno = lineno
            raise


def parse_edge_list(
    text: Union[str, Iterable[str]], filename: Optional[str] = None
) -> Graph:
    """Decode an edge list: one ``u v`` pair per line.

    A ``#base=0`` or ``#base=1`` header selects the index base (default 0);
    an optional ``#n=K`` header declares the vertex count so that isolated
    vertices survive. Other ``#`` lines are comments. Duplicate edges collapse.
    """
    if isinstance(text, str):
        text = text.splitlines()

    base = 0
    declared_n = None
    edges: List[Tuple[int, int, int]] = []
    for lineno, line in SourceIterator(text, filename, keep_comments=True):
        if line.startswith("#"):
            match = _BASE_RE.match(line)
            if match:
                base = int(match.group(1))
                if base not in (0, 1):
                    raise GraphFormatError(
                        f"index base must be 0 or 1, not {base}",
                        filename=filename,
                        lineno=lineno,
                    )
                continue
            match = _ORDER_RE.match(line)
            if match:
                declared_n = int(match.group(1))
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise GraphFormatError(
                f"expected 'u v', got '{line}'", filename=filename, lineno=lineno
            )
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError(
                f"vertex indices must be integers, got '{line}'",
                filename=filename,
                lineno=lineno,
            ) from None
        if u == v:
            raise GraphFormatError(
                f"self-loop at vertex {u}", filename=filename, lineno=lineno
            )
        edges.append((lineno, u - base, v - base))

    if declared_n is None:
        if not edges:
            raise GraphFormatError(
                "edge list has no edges and no '#n=' header", filename=filename
            )
        n = max(max(u, v) for _, u, v in edges) + 1
    else:
        n = declared_n

    if n < 1:
        raise GraphFormatError("an edge list needs at least one vertex", filename=filename)

    if n > MAX_VERTICES:
        raise GraphFormatError(
            f"graph has {n} vertices, more than the supported {MAX_VERTICES}",
            filename=filename,
        )
    for lineno, u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(
                    f"vertex index {x + base} out of range for base {base} and n = {n}",
                    filename=filename,
                    lineno=lineno,
                )
    return Graph.from_edges(n, ((u, v) for _, u, v in edges))


def write_edge_list(g: Graph, base: int = 0) -> str:
    lines = [f"#base={base}", f"#n={g.n}"]
    lines += [f"{u + base} {v + base}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graphs(
    path: Union[str, pathlib.Path], fmt: str = "graph6"
) -> List[Tuple[str, Graph]]:
    """Load ``(source id, graph)`` pairs from a file.

    graph6 files hold one graph per line (id ``file:lineno``); an edge-list
    file holds a single graph (id ``file``).
    """
    path = pathlib.Path(path)
    with path.open(encoding="utf-8") as fp:
        if fmt == "graph6":
            out = [
                (f"{path}:{lineno}", g)
                for lineno, g in read_graph6_lines(fp, str(path))
            ]
        elif fmt == "edgelist":
            out = [(str(path), parse_edge_list(fp.read(), str(path)))]
        else:
            raise ValueError(f"unknown graph format '{fmt}'")
    logger.debug("read %d graphs from %s", len(out), path)
    return out
