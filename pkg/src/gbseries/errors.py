"""Exception types shared across the package."""


class RingMismatchError(ValueError):
    """Operands live in different rings (kind or generator count differ)."""


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no leading term."""


class NotReducibleError(ValueError):
    """The requested single reduction step does not apply."""


class GradingError(ValueError):
    """A relation is not homogeneous for the ring's generator degrees."""


class SaturationError(RuntimeError):
    """A truncated basis cannot certify counts up to the requested degree."""


class PresentationError(ValueError):
    """Syntax or validation error in a presentation file."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
