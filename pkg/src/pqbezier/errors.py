"""Exception types raised by pqbezier."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class DegenerateError(ValueError):
    """The input is geometrically degenerate for the requested operation."""


class VerificationError(ArithmeticError):
    """A gated algorithm variant disagreed with the reference evaluation."""
