"""Exception types shared across the package."""


class InvalidWord(ValueError):
    """A word that was expected to have distinct entries does not."""


class InvalidArgument(ValueError):
    """An argument is outside the domain of an operation."""


class ParseError(ValueError):
    """Malformed textual input.

    ``position`` is the 0-based offset in the input where parsing failed.
    """

    def __init__(self, message, position=0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ClosureViolation(ArithmeticError):
    """A product of fiber sums did not decompose into whole fibers."""
