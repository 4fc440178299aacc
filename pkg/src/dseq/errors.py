"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for every error raised by this package on bad input."""


class DimensionMismatch(EngineError):
    """Domain/codomain dimensions do not line up for the requested operation."""


class TagMismatch(EngineError):
    """Polynomial and elementary morphisms were mixed in one operation."""


class InsufficientOrder(EngineError):
    """An operation needs more truncation budget than the sequence carries."""


class OrderMismatch(EngineError):
    """A declared truncation order is inconsistent with the data it describes."""


class AxiomViolation(EngineError):
    """A tower offered where a verified derivative tower is required."""


class ParseError(EngineError):
    """Syntax error in a component expression.

    Carries the 0-based offset of the offending token and the set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class UnknownVariable(ParseError):
    """A variable index at or above the declared domain dimension."""


class FunctionNotAllowed(ParseError):
    """sin/cos/exp used in a component of a polynomial-base map."""
