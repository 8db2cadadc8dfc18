class CombxError(Exception):
    r"""
    Base class of every error raised by :python:`combx`.
    """


class FormulaSyntaxError(CombxError, SyntaxError):
    r"""
    Raised on malformed formula text.

    Args:
        message (:python:`str`): Human-readable description.
        text (:python:`str`): The input text.
        offset (:python:`int`): Byte offset (in the UTF-8 encoding of :python:`text`) of the error.
    """

    def __init__(self, message, text="", offset=0):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.text = text
        self.offset = offset


class AmbiguityError(FormulaSyntaxError):
    r"""
    Raised when :python:`->` and :python:`<-` are mixed at one level without parentheses.
    """


class CycleError(CombxError):
    r"""
    Raised when an edge list closes up into a cycle, i.e., violates antisymmetry.
    """


class NoGreatestElement(CombxError):
    pass


class DomainError(CombxError, ValueError):
    pass


class NotCoTree(CombxError):
    pass


class NotUpset(CombxError):
    pass


class LimitExceeded(CombxError):
    pass


class UnassignedVariable(CombxError, KeyError):
    pass


class SearchBudgetExceeded(CombxError):
    r"""
    Raised when a search runs out of its configured budget.

    Args:
        message (:python:`str`): Human-readable description.
        partial (*optional*): Whatever was established before the budget ran out
            (default: :python:`None`).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
