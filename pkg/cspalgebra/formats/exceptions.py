"""Format exceptions."""


class FormatError(Exception):
    """Base exception for file formats and reports."""

    pass


class ParseError(FormatError):
    """Input text is malformed; carries the position of the offending token."""

    def __init__(self, message: str, line: int, column: int = 1, source: str = "<input>") -> None:
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")


class ReportError(FormatError):
    """A JSON report does not match the schema or cannot be rebuilt."""

    pass
