"""
    graphconj.errors
    ~~~~~~~~~~~~~~~~

    Exceptions raised while building graphs, decoding graph files,
    parsing conjectures and exporting them.

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""


def _file_prefix(filename=None, lineno=None):
    if filename and lineno is not None:
        return f"While opening {filename}, in line {lineno}: "
    elif filename:
        return f"While opening {filename}: "
    elif lineno is not None:
        return f"In line {lineno}: "
    else:
        return ""


class GraphConjError(Exception):
    """Base exception for all GraphConj errors."""


class GraphError(ValueError, GraphConjError):
    """Raised when a graph cannot be built (self-loop, asymmetric adjacency, ...)."""


class GraphSizeError(GraphError):
    """Raised when a graph (or its line graph) does not fit 64-bit rows."""

    def __init__(self, what, value, limit=64):
        super().__init__(what, value, limit)

    def __str__(self):
        what, value, limit = self.args
        return f"{what} = {value} exceeds the supported maximum of {limit}"


class GraphFormatError(ValueError, GraphConjError):
    """Raised when a graph6 line or an edge list cannot be decoded."""

    def __init__(self, msg, *, offset=None, filename=None, lineno=None):
        super().__init__(msg)
        self.offset = offset
        self.filename = filename
        self.lineno = lineno

    def __str__(self):
        msg = str(self.args[0])
        if self.offset is not None:
            msg = f"{msg} (at byte offset {self.offset})"
        return _file_prefix(self.filename, self.lineno) + msg

    def __reduce__(self):
        return GraphFormatError, self.args, self.__dict__


class ConjectureSyntaxError(SyntaxError, GraphConjError):
    """Raised when a conjecture text does not match the grammar."""

    def __init__(self, msg, *, lineno=None, col=None, filename=None):
        super().__init__(msg)
        self.filename = filename
        self.lineno = lineno
        self.col = col

    def __str__(self):
        msg = str(self.args[0])
        if self.col is not None:
            msg = f"column {self.col}: {msg}"
        return _file_prefix(self.filename, self.lineno) + msg

    @property
    def __dict__(self):
        # SyntaxError.filename and lineno are special fields that don't appear in
        # the __dict__, which breaks pickling and deepcopy.
        return {"filename": self.filename, "lineno": self.lineno, "col": self.col}

    def __reduce__(self):
        return type(self), self.args, self.__dict__


class UnknownIdentifierError(ConjectureSyntaxError):
    """Raised when a conjecture mentions an invariant or atom that does not exist."""

    def __init__(self, name, *, lineno=None, col=None, filename=None):
        super().__init__(
            f"unknown identifier `{name}`", lineno=lineno, col=col, filename=filename
        )
        self.name = name

    @property
    def __dict__(self):
        return {
            "filename": self.filename,
            "lineno": self.lineno,
            "col": self.col,
            "name": self.name,
        }

    def __reduce__(self):
        return _rebuild_unknown_identifier, (self.__dict__,)


def _rebuild_unknown_identifier(state):
    return UnknownIdentifierError(
        state["name"],
        lineno=state["lineno"],
        col=state["col"],
        filename=state["filename"],
    )


class EnumerationBudgetError(RuntimeError, GraphConjError):
    """Raised when an enumeration would exceed its graph-count cap."""


class GenerationError(RuntimeError, GraphConjError):
    """Raised when random graph generation cannot satisfy its request."""


class UnmappedIdentifierError(KeyError, GraphConjError):
    """Raised when a conjecture cannot be written in Lean."""

    def __str__(self):
        return f"'{self.args[0]}' has no Lean identifier"


class InvariantError(RuntimeError, GraphConjError):
    """Raised when an internal consistency check fails; signals a bug."""
