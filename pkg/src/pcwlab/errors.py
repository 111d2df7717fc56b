"""Exception types shared by the whole package."""


class PcwError(Exception):
    """Base class for every error raised by pcwlab."""


class DimensionError(PcwError, ValueError):
    """Vector or matrix sizes do not agree."""


class CapacityError(PcwError):
    """A brute-force routine would exceed its configured size bound.

    ``bound`` names the keyword argument (and CLI flag) that raises the limit.
    """

    def __init__(self, message, bound=None, limit=None):
        super().__init__(message)
        self.bound = bound
        self.limit = limit


class DomainError(PcwError, ValueError):
    """Input outside the mathematical domain of an operation."""


class NotACycleCodeError(DomainError):
    pass


class NotBitEvenError(DomainError):
    pass


class NotACodewordError(DomainError):
    pass


class PreconditionError(DomainError):
    """Operation precondition failed (e.g. vector outside the fundamental cone)."""


class NotInvertibleError(DomainError):
    pass


class TruncationError(PcwError, IndexError):
    """Query beyond the truncation degree of a series (distinct from a zero coefficient)."""


class ParseError(PcwError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantBreach(PcwError, AssertionError):
    """Internal invariant of the lifting construction failed; carries a state dump."""

    def __init__(self, message, state=None):
        super().__init__(message if state is None else f"{message}\n{state}")
        self.state = state
