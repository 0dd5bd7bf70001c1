"""
    graphconj.util
    ~~~~~~~~~~~~~~

    Miscellaneous functions for graphconj: bitset helpers, exact number
    formatting, line iteration over text sources and a deterministic
    parallel map.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from logging import NullHandler
from typing import Callable, Iterable, Iterator, List, Sequence, TypeVar

from .compat import popcount  # noqa: F401

logger = logging.getLogger(__name__)
logger.addHandler(NullHandler())

T = TypeVar("T")
S = TypeVar("S")


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of x, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def lowest_bit(x: int) -> int:
    """Position of the lowest set bit of a nonzero x."""
    return (x & -x).bit_length() - 1


def bits_of(vertices: Iterable[int]) -> int:
    """Pack vertex indices into a bitset."""
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def format_fraction(value) -> str:
    """Format an exact value as ``p`` or ``p/q``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Inverse of :func:`format_fraction`."""
    return Fraction(text.strip())


def parallel_map(
    func: Callable[[T], S], items: Sequence[T], workers: int = 1, chunksize: int = 64
) -> List[S]:
    """Map func over items, keeping input order regardless of the worker count.

    func must be picklable (a module level function or a partial of one)
    when workers > 1.
    """
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, not {workers}")
    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items, chunksize=chunksize))


class SourceIterator:
    """Iterator to facilitate reading conjecture and edge-list files.

    Accepts any sequence (like a list of lines, a file or another SourceIterator)

    The iterator yields the line number and line (skipping comments and empty lines)
    and stripping white spaces.

    for lineno, line in SourceIterator(sequence):
        # do something here

    With ``keep_comments=True`` comment lines are yielded as well, which lets
    edge-list readers see their ``#base=`` header.
    """

    def __new__(cls, sequence, filename=None, keep_comments=False):
        if isinstance(sequence, SourceIterator):
            return sequence

        obj = object.__new__(cls)

        if sequence is not None:
            obj.internal = enumerate(sequence, 1)
            obj.last = (None, None)
            obj.filename = filename or getattr(sequence, "name", None)
            obj.keep_comments = keep_comments

        return obj

    def __iter__(self):
        return self

    def __next__(self):
        line = ""
        while not line:
            lineno, line = next(self.internal)
            line = line.strip()
            if line.startswith("#"):
                if not self.keep_comments:
                    line = ""
            else:
                line = line.split("#", 1)[0].strip()

        self.last = lineno, line
        return lineno, line

    next = __next__
