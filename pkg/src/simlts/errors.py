"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed user input: bad file, bad symbol, mismatched alphabets."""


class ParseError(InputError):
    """Input error tied to a specific line of a text file."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class OracleScaleError(RuntimeError):
    """A configured scale cap was exceeded (brute-force guard tripped)."""
