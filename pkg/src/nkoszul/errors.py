"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Operands live in incompatible ambient spaces or degrees."""


class ContractViolation(RuntimeError):
    """An internal invariant failed; this indicates a bug, not bad input."""


class DefinitionError(ValueError):
    """An algebra definition file failed to parse or validate."""

    def __init__(self, message, line=None, col=None, source=None):
        self.message = message
        self.line = line
        self.col = col
        self.source = source
        loc = ""
        if source is not None:
            loc += "%s:" % source
        if line is not None:
            loc += "%d:" % line
        if col is not None:
            loc += "%d:" % col
        super().__init__((loc + " " if loc else "") + message)
