"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Vector lengths disagree with each other or with a network."""


class InvalidCodewordError(ValueError):
    """A symbol sequence is not a staircase quaternary codeword."""


class FormatError(ValueError):
    """A text file does not follow its documented format."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
