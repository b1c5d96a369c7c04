"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied data: unknown ids, malformed words, bad trees."""


class ParseError(InputError):
    """A text file could not be parsed; carries a 1-based location."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<input>"):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        if line:
            super().__init__(f"{source}:{line}:{column}: {message}")
        else:
            super().__init__(f"{source}: {message}")
