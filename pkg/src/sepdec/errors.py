"""Exception hierarchy.

``InputError`` covers malformed arguments (bad names, unknown indices,
overlapping sets), ``DomainError`` covers structurally valid inputs that an
operation cannot handle (non-chordal, disconnected, not alpha-acyclic).
The CLI maps ``ParseError`` to exit code 1 and ``DomainError`` to exit code 2.
"""


class SepdecError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SepdecError, ValueError):
    """An argument violates a documented precondition."""


class ParseError(InputError):
    """A text input could not be parsed; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(SepdecError):
    """The input is outside the mathematical domain of the operation."""


class NotChordalError(DomainError):
    """A chordal graph was required."""


class DisconnectedError(DomainError):
    """A connected graph was required."""


class NotAcyclicError(DomainError):
    """The hypergraph has no join tree; carries a witness vertex name."""

    def __init__(self, witness: str):
        super().__init__(
            f"hypergraph is not alpha-acyclic: the hyperedges containing "
            f"vertex {witness!r} do not induce a subtree"
        )
        self.witness = witness
