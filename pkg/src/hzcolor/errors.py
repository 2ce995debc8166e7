"""Exception types raised by the coloring engine, solvers and I/O layer."""


class HZColorError(Exception):
    """Base class for all package errors."""


class StaleChain(HZColorError):
    pass


class PrecedenceViolation(HZColorError):
    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


class AmbiguousMissing(HZColorError):
    pass


class ImproperResult(HZColorError):
    pass


class MismatchedBase(HZColorError):
    pass


class InvalidTriple(HZColorError):
    pass


class NotElementary(HZColorError):
    pass


class NotAPermutation(HZColorError):
    pass


class ConstraintViolation(HZColorError):
    def __init__(self, clause: str, message: str = ""):
        super().__init__(f"{clause}: {message}" if message else clause)
        self.clause = clause


class BudgetExceeded(HZColorError):
    def __init__(self, message: str = "budget exceeded", interval: tuple[int, int] | None = None):
        super().__init__(message)
        self.interval = interval


class TooLarge(HZColorError):
    pass


class ScriptError(HZColorError):
    """A script step failed; ``step`` is the zero-based index of the failing step."""

    def __init__(self, step: int, cause: Exception):
        super().__init__(f"step {step}: {cause}")
        self.step = step
        self.cause = cause


class ParseError(HZColorError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass
