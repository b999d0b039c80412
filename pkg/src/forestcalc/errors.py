"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ForestCalcError(Exception):
    pass


class ParseError(ForestCalcError, ValueError):
    """Malformed ordinal or term text. ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.message = message
        self.text = text
        self.pos = pos
        if pos is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at position {pos}")


class KindError(ParseError):
    """A term constructor received a subterm of the wrong syntactic sort."""


class ValidationError(ForestCalcError, ValueError):
    pass


class QOError(ValidationError):
    pass


class UndeclaredLabelError(ValidationError):
    pass


class LevelError(ValidationError):
    pass


class EnumerationLimitError(ForestCalcError, RuntimeError):
    pass
