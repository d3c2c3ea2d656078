"""Exceptions raised by the quandle toolkit."""


class QuandleToolkitError(Exception):
    """Base class for every error the toolkit raises on purpose."""


class InputError(QuandleToolkitError):
    """Input text or data could not be turned into a valid object."""


class ParseError(InputError):
    pass


class MalformedInputError(InputError):
    pass


class UsageError(InputError):
    """Bad command-line arguments; carries the usage line of the parser that failed."""

    def __init__(self, message: str, usage: str = "") -> None:
        super().__init__(message)
        self.usage = usage


class DomainError(QuandleToolkitError):
    """Well-formed input that falls outside an operation's domain."""


class NotAQuandleError(DomainError):
    pass


class NotASubquandleError(DomainError):
    pass


class NotAHomomorphismError(DomainError):
    pass


class NotAGroupError(DomainError):
    pass


class InvalidParameterError(DomainError):
    pass


class EvaluationDomainError(DomainError):
    pass


class UnsupportedOrderError(DomainError):
    pass


__all__ = [
    "QuandleToolkitError",
    "InputError",
    "ParseError",
    "MalformedInputError",
    "UsageError",
    "DomainError",
    "NotAQuandleError",
    "NotASubquandleError",
    "NotAHomomorphismError",
    "NotAGroupError",
    "InvalidParameterError",
    "EvaluationDomainError",
    "UnsupportedOrderError",
]
