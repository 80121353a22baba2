"""Exception types raised by the p3count package.

Library code raises these; only the command-line front end catches them and turns
them into coloured messages and exit codes.
"""


class P3CountError(Exception):
    """Base class for every error raised by p3count."""


class GraphParseError(P3CountError, ValueError):
    """Raised when edge-list or JSON text cannot be turned into a Graph.

    Attributes:
        line_number (int | None): 1-based line of the offending input, when known.
    """

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GraphConstructionError(P3CountError, ValueError):
    """Raised when a generator or constructor receives invalid parameters."""


class VertexIndexError(P3CountError, IndexError):
    """Raised when a vertex index is outside the graph."""


class CapExceededError(P3CountError):
    """Raised when an exhaustive operation is asked to exceed its size cap.

    Caps are refusals: no partial result is ever returned.

    Attributes:
        cap (int): The configured cap.
        requested (int): The size the caller asked for.
    """

    def __init__(self, what: str, cap: int, requested: int):
        self.cap = cap
        self.requested = requested
        super().__init__(f"{what} refused: size {requested} exceeds cap {cap}")


class PreconditionError(P3CountError, ValueError):
    """Raised when an algorithm's input does not meet its precondition."""


class InconsistencyError(P3CountError, ArithmeticError):
    """Raised when two values that should belong together do not."""
