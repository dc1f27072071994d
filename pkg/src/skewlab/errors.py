class SkewlabError(Exception):
    pass


class ParseError(SkewlabError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.message = message
        self.text = text
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}" + (f" in {text!r}" if text else ""))


class PreconditionError(SkewlabError, ValueError):
    """A standing hypothesis of an operation does not hold for the input."""

    def __init__(self, hypothesis: str, message: str = ""):
        self.hypothesis = hypothesis
        super().__init__(message or hypothesis)


class ConsistencyError(SkewlabError, RuntimeError):
    """An internal invariant failed; indicates a bug or a false theorem instance."""
