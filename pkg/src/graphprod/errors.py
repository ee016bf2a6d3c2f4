"""Exception hierarchy shared by all modules."""


class GraphProductError(Exception):
    """Base class for every error raised by this package."""


class ParseError(GraphProductError, ValueError):
    """Malformed graph file, abelian label or word text.

    ``line`` and ``column`` are 1-based and may be ``None`` when the input
    has no line structure.
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        if where:
            return f"{', '.join(where)}: {self.message}"
        return self.message

    def at(self, line=None, column_offset=0):
        """Return a copy relocated into a larger input."""
        column = None if self.column is None else self.column + column_offset
        return ParseError(self.message, line if line is not None else self.line, column)


class SemanticError(GraphProductError, ValueError):
    """Well-formed input that the requested operation cannot accept."""


class GraphError(SemanticError):
    """A labeled graph violates its structural invariants."""


class UnknownVertexError(SemanticError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown vertex {name!r}")


class LabelError(SemanticError):
    """A vertex label has the wrong shape for the operation (e.g. not cyclic)."""


class ContextMismatchError(SemanticError):
    """Two words live in different graph products."""


class NotCPError(SemanticError):
    pass


class InfiniteOrderError(SemanticError):
    pass


class RadiusCapError(SemanticError):
    def __init__(self, radius, cap):
        self.radius = radius
        self.cap = cap
        super().__init__(f"radius {radius} exceeds the enumeration cap {cap}")
