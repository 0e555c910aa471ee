"""Exception types shared across the package."""


class InconsistentIdealError(ArithmeticError):
    """The ideal contains 1 (a saturation or remainder became a nonzero scalar)."""

    def __init__(self, msg: str = "inconsistent presentation: ideal contains 1"):
        super().__init__(msg)


class NormalFormError(ValueError):
    """A letterplace polynomial is not in normal form modulo the commutator ideal."""


class CriterionError(ValueError):
    """An S-polynomial was requested for a pair rejected by the criteria."""


class ParseError(ValueError):
    """Syntax or validation error in an expression or input file."""

    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        elif col is not None:
            where = f"col {col}: "
        super().__init__(where + msg)
        self.line = line
        self.col = col
