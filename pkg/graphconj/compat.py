"""
    graphconj.compat
    ~~~~~~~~~~~~~~~~

    Compatibility layer.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""
import tokenize
from io import BytesIO

from .errors import ConjectureSyntaxError


#: Token types that carry no meaning for the conjecture grammar.
_LAYOUT_TOKENS = frozenset(
    (tokenize.ENCODING, tokenize.NEWLINE, tokenize.NL, tokenize.INDENT, tokenize.DEDENT)
)


def tokenizer(input_string):
    """Tokenize a one-line conjecture text, dropping layout tokens.

    A ``tokenize.TokenError`` (raised at end of input for an unclosed
    bracket or string) becomes a :class:`ConjectureSyntaxError` with the
    column of the offending token.
    """
    opened = []
    try:
        for tokinfo in tokenize.tokenize(
            BytesIO(input_string.encode("utf-8")).readline
        ):
            if tokinfo.type == tokenize.OP:
                if tokinfo.string in ("(", "[", "{"):
                    opened.append(tokinfo)
                elif tokinfo.string in (")", "]", "}") and opened:
                    opened.pop()
            if tokinfo.type not in _LAYOUT_TOKENS:
                yield tokinfo
    except tokenize.TokenError as ex:
        if opened:
            raise ConjectureSyntaxError(
                "unclosed parenthesis", col=opened[-1].start[1] + 1
            ) from None
        col = None
        if len(ex.args) > 1 and isinstance(ex.args[1], tuple):
            col = ex.args[1][1] + 1
        raise ConjectureSyntaxError(f"lexical error: {ex.args[0]}", col=col) from None


if hasattr(int, "bit_count"):

    def popcount(x: int) -> int:
        return x.bit_count()

else:  # pragma: no cover

    def popcount(x: int) -> int:
        return bin(x).count("1")


try:
    import networkx as nx

    HAS_NETWORKX = True
except ImportError:
    nx = None
    HAS_NETWORKX = False
