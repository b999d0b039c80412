from __future__ import annotations

from .errors import ParseError

_IDENT_START = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CHARS = _IDENT_START | frozenset("0123456789")


class Scanner:
    """Character cursor with whitespace skipping, shared by the ordinal and term parsers."""

    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def error(self, message: str, pos: int | None = None, cls=ParseError) -> ParseError:
        return cls(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n and text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.accept(ch):
            found = self.peek()
            raise self.error(f"expected {ch!r}, found {found!r}" if found else f"expected {ch!r}, found end of input")

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def ident(self) -> str | None:
        self.skip_ws()
        start = self.pos
        if start >= len(self.text) or self.text[start] not in _IDENT_START:
            return None
        self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos] in _IDENT_CHARS:
            self.pos += 1
        return self.text[start:self.pos]

    def finish(self) -> None:
        if not self.at_end():
            raise self.error(f"unexpected {self.peek()!r}")


def is_identifier(name: str) -> bool:
    return bool(name) and name[0] in _IDENT_START and all(c in _IDENT_CHARS for c in name)
