"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, multiplicity)`` pairs with
strictly decreasing exponents, each exponent itself an :class:`Ordinal`.
``w^2+w*3+4`` is ``((2, 1), (1, 3), (0, 4))``; zero is the empty tuple.

Textual syntax (``w`` stands for omega)::

    ordinal := power ("+" power)*
    power   := "w" ("^" factor)? ("*" nat)? | nat
    factor  := nat | "(" ordinal ")"
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Union

from ._scan import Scanner


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Ordinal:
    terms: tuple = ()
    _key: tuple = field(default=(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        prev = None
        for pair in self.terms:
            if len(pair) != 2:
                raise ValueError(f"malformed CNF summand {pair!r}")
            exp, mult = pair
            if not isinstance(exp, Ordinal):
                raise TypeError("CNF exponents must be Ordinal instances")
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {mult!r}")
            if prev is not None and not exp._key < prev._key:
                raise ValueError("CNF exponents must strictly decrease")
            prev = exp
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "_key", tuple((e._key, m) for e, m in self.terms))

    @classmethod
    def of(cls, n: int) -> Ordinal:
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent: Ordinal, mult: int = 1) -> Ordinal:
        return cls(((exponent, mult),))

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key < other._key

    def __le__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key <= other._key

    def __gt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key > other._key

    def __ge__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key >= other._key

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        if isinstance(other, int):
            return add(Ordinal.of(other), self)
        return NotImplemented

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    def __int__(self):
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    @property
    def sort_key(self) -> tuple:
        """Nested tuple whose lexicographic order is the ordinal order."""
        return self._key


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))

OrdinalLike = Union[Ordinal, int, str]


def ordinal(value: OrdinalLike) -> Ordinal:
    """Coerce an int, ordinal literal or Ordinal to an Ordinal."""
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not an ordinal")
    if isinstance(value, int):
        return Ordinal.of(value)
    if isinstance(value, str):
        return parse_ordinal(value)
    raise TypeError(f"cannot interpret {value!r} as an ordinal")


def compare(a: Ordinal, b: Ordinal) -> Ordering:
    if a._key < b._key:
        return Ordering.LT
    if a._key == b._key:
        return Ordering.EQ
    return Ordering.GT


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    lead, lead_mult = b.terms[0]
    kept = []
    for exp, mult in a.terms:
        c = compare(exp, lead)
        if c is Ordering.GT:
            kept.append((exp, mult))
        elif c is Ordering.EQ:
            lead_mult += mult
            break
        else:
            break
    return Ordinal((*kept, (lead, lead_mult), *b.terms[1:]))


def summands(a: Ordinal) -> tuple:
    """Exponents ``(a0, ..., am)`` with ``a = w^a0 + ... + w^am``, repeated by multiplicity."""
    if not a.terms:
        raise ValueError("0 has no Cantor-normal-form summands")
    return tuple(exp for exp, mult in a.terms for _ in range(mult))


def exponents(a: Ordinal) -> tuple:
    """Distinct CNF exponents of ``a`` in decreasing order."""
    return tuple(exp for exp, _ in a.terms)


def split_leading(a: Ordinal) -> tuple:
    """Split non-zero ``a`` as ``w^lead + rest``."""
    if not a.terms:
        raise ValueError("0 has no leading summand")
    (lead, mult), tail = a.terms[0], a.terms[1:]
    rest = Ordinal(((lead, mult - 1), *tail)) if mult > 1 else Ordinal(tail)
    return lead, rest


def from_summands(exps: Iterable[Ordinal]) -> Ordinal:
    total = ZERO
    for exp in exps:
        total = add(total, Ordinal.omega_power(exp))
    return total


def format_ordinal(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for exp, mult in a.terms:
        if not exp:
            parts.append(str(mult))
            continue
        if exp == ONE:
            base = "w"
        elif exp.is_finite:
            base = f"w^{int(exp)}"
        else:
            base = f"w^({format_ordinal(exp)})"
        parts.append(base if mult == 1 else f"{base}*{mult}")
    return "+".join(parts)


def parse_ordinal(text: str) -> Ordinal:
    sc = Scanner(text)
    value = read_ordinal(sc)
    sc.finish()
    return value


def read_ordinal(sc: Scanner) -> Ordinal:
    """Read one ordinal at the scanner's cursor; non-canonical sums are normalized."""
    value = _read_power(sc)
    while sc.accept("+"):
        value = add(value, _read_power(sc))
    return value


def _read_power(sc: Scanner) -> Ordinal:
    ch = sc.peek()
    if ch.isdigit():
        return Ordinal.of(sc.nat())
    if ch != "w":
        raise sc.error(f"expected 'w' or a natural number, found {ch!r}" if ch else "unexpected end of ordinal")
    start = sc.pos
    if sc.ident() != "w":
        raise sc.error("expected 'w'", start)
    exp = ONE
    if sc.accept("^"):
        if sc.accept("("):
            exp = read_ordinal(sc)
            sc.expect(")")
        else:
            exp = Ordinal.of(sc.nat())
    mult = 1
    if sc.accept("*"):
        mult = sc.nat()
        if mult == 0:
            return ZERO
    return Ordinal.omega_power(exp, mult)


__all__ = [
    "Ordinal",
    "Ordering",
    "ZERO",
    "ONE",
    "OMEGA",
    "ordinal",
    "compare",
    "add",
    "summands",
    "exponents",
    "split_leading",
    "from_summands",
    "format_ordinal",
    "parse_ordinal",
    "read_ordinal",
]
