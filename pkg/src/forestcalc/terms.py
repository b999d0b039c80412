"""Hash-consed terms for iterated labeled forests.

Four node kinds:

* ``Label(q)``          a constant from the label alphabet (singleton kind)
* ``SApp(alpha, body)`` the singleton ``s_alpha(body)``; body has tree kind
* ``Dot(head, tail)``   the tree ``head . tail``; head singleton, tail a forest
* ``Forest(children)``  a finite (possibly empty) join of trees

Construction interns every node, so structurally equal terms are the same
Python object and share one integer ``id``. Equality is identity.

Concrete syntax::

    forest    := "[" "]" | "[" tree ("," tree)* "]"
    tree      := singleton | singleton "." forest
    singleton := label | "s" "{" ordinal "}" "(" tree ")"

Labels are identifiers; ``s`` and ``w`` must be written quoted (``'s'``).
"""

from __future__ import annotations

import threading
from itertools import count
from typing import Iterable, Iterator

from ._scan import Scanner, is_identifier
from .errors import KindError, UndeclaredLabelError
from .ordinals import Ordinal, OrdinalLike, compare, format_ordinal, ordinal, read_ordinal, split_leading

RESERVED_LABELS = frozenset({"s", "w"})

_table: dict = {}
_lock = threading.Lock()
_ids = count()

KIND_LABEL, KIND_SAPP, KIND_DOT, KIND_FOREST = range(4)


def _intern(cls, key, init):
    node = _table.get(key)
    if node is not None:
        return node
    with _lock:
        node = _table.get(key)
        if node is None:
            node = object.__new__(cls)
            init(node)
            node.id = next(_ids)
            _table[key] = node
    return node


class Term:
    __slots__ = ("id", "size", "labels", "_sort_key", "_text")
    kind: int

    is_singleton = False
    is_tree = False
    is_forest = False

    def __setattr__(self, name, value):
        if hasattr(self, "id"):
            raise AttributeError("terms are immutable")
        object.__setattr__(self, name, value)

    def __reduce__(self):
        return parse_term, (print_term(self),)

    def __hash__(self):
        return self.id

    def __eq__(self, other):
        return self is other

    def __repr__(self):
        return f"{type(self).__name__}<{print_term(self)}>"

    def __str__(self):
        return print_term(self)

    @property
    def sort_key(self) -> tuple:
        """Key of the fixed syntactic total order (kind, then index, then label, then children)."""
        return self._sort_key

    def __lt__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self._sort_key < other._sort_key


class Label(Term):
    __slots__ = ("name",)
    __match_args__ = ("name",)
    kind = KIND_LABEL
    is_singleton = True
    is_tree = True

    def __new__(cls, name: str):
        if not isinstance(name, str) or not is_identifier(name):
            raise KindError(f"label {name!r} is not an identifier")

        def init(node):
            object.__setattr__(node, "name", name)
            object.__setattr__(node, "size", 1)
            object.__setattr__(node, "labels", frozenset((name,)))
            object.__setattr__(node, "_sort_key", (KIND_LABEL, name))
            object.__setattr__(node, "_text", None)

        return _intern(cls, (KIND_LABEL, name), init)


class SApp(Term):
    __slots__ = ("index", "body")
    __match_args__ = ("index", "body")
    kind = KIND_SAPP
    is_singleton = True
    is_tree = True

    def __new__(cls, index: OrdinalLike, body: Term):
        index = ordinal(index)
        if not isinstance(body, Term) or not body.is_tree:
            raise KindError("the body of s{...}(...) must be a tree term")

        def init(node):
            object.__setattr__(node, "index", index)
            object.__setattr__(node, "body", body)
            object.__setattr__(node, "size", 1 + body.size)
            object.__setattr__(node, "labels", body.labels)
            object.__setattr__(node, "_sort_key", (KIND_SAPP, index.sort_key, body._sort_key))
            object.__setattr__(node, "_text", None)

        return _intern(cls, (KIND_SAPP, index, body.id), init)


class Dot(Term):
    __slots__ = ("head", "tail")
    __match_args__ = ("head", "tail")
    kind = KIND_DOT
    is_tree = True

    def __new__(cls, head: Term, tail: Term):
        if not isinstance(head, Term) or not head.is_singleton:
            raise KindError("the head of a dot term must be a singleton term")
        if not isinstance(tail, Term) or not tail.is_forest:
            raise KindError("the tail of a dot term must be a forest term")

        def init(node):
            object.__setattr__(node, "head", head)
            object.__setattr__(node, "tail", tail)
            object.__setattr__(node, "size", 1 + head.size + tail.size)
            object.__setattr__(node, "labels", head.labels | tail.labels)
            object.__setattr__(node, "_sort_key", (KIND_DOT, head._sort_key, tail._sort_key))
            object.__setattr__(node, "_text", None)

        return _intern(cls, (KIND_DOT, head.id, tail.id), init)


class Forest(Term):
    __slots__ = ("children",)
    __match_args__ = ("children",)
    kind = KIND_FOREST
    is_forest = True

    def __new__(cls, children: Iterable[Term] = ()):
        children = tuple(children)
        for c in children:
            if not isinstance(c, Term) or not c.is_tree:
                raise KindError("forest components must be tree terms")

        def init(node):
            object.__setattr__(node, "children", children)
            object.__setattr__(node, "size", 1 + sum(c.size for c in children))
            object.__setattr__(node, "labels", frozenset().union(*(c.labels for c in children)))
            object.__setattr__(node, "_sort_key", (KIND_FOREST, tuple(c._sort_key for c in children)))
            object.__setattr__(node, "_text", None)

        return _intern(cls, (KIND_FOREST, tuple(c.id for c in children)), init)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.children)

    def __len__(self) -> int:
        return len(self.children)


EMPTY = Forest(())


def interned_count() -> int:
    return len(_table)


def node_count(t: Term) -> int:
    return t.size


def check_labels(t: Term, q) -> None:
    """Raise UndeclaredLabelError if ``t`` mentions a label that ``q`` does not declare."""
    missing = sorted(name for name in t.labels if name not in q)
    if missing:
        raise UndeclaredLabelError(f"undeclared label {missing[0]!r}")


# -- printing ---------------------------------------------------------------

def _label_text(name: str) -> str:
    return f"'{name}'" if name in RESERVED_LABELS else name


def print_term(t: Term) -> str:
    text = t._text
    if text is not None:
        return text
    if isinstance(t, Label):
        text = _label_text(t.name)
    elif isinstance(t, SApp):
        text = f"s{{{format_ordinal(t.index)}}}({print_term(t.body)})"
    elif isinstance(t, Dot):
        text = f"{print_term(t.head)}.{print_term(t.tail)}"
    else:
        text = "[" + ",".join(print_term(c) for c in t.children) + "]"
    object.__setattr__(t, "_text", text)
    return text


# -- parsing ----------------------------------------------------------------

def parse_term(text: str, q=None) -> Term:
    """Parse ``text``; if a quasiorder ``q`` is given, every label must be declared in it."""
    sc = Scanner(text)
    t = _read_item(sc, q)
    sc.finish()
    return t


def _read_item(sc: Scanner, q) -> Term:
    sc.skip_ws()
    start = sc.pos
    if sc.peek() == "[":
        first = _read_forest(sc, q)
    else:
        first = _read_singleton(sc, q)
    if sc.peek() != ".":
        return first
    if not first.is_singleton:
        raise sc.error("the head of a dot term must be a singleton term", start, KindError)
    sc.pos += 1
    sc.skip_ws()
    tail_at = sc.pos
    tail = _read_item(sc, q)
    if not tail.is_forest:
        raise sc.error("the tail of a dot term must be a forest term", tail_at, KindError)
    return Dot(first, tail)


def _read_forest(sc: Scanner, q) -> Term:
    sc.expect("[")
    children = []
    if sc.accept("]"):
        return EMPTY
    while True:
        sc.skip_ws()
        at = sc.pos
        child = _read_item(sc, q)
        if not child.is_tree:
            raise sc.error("forest components must be tree terms", at, KindError)
        children.append(child)
        if sc.accept("]"):
            return Forest(children)
        sc.expect(",")


def _read_singleton(sc: Scanner, q) -> Term:
    sc.skip_ws()
    start = sc.pos
    if sc.peek() == "'":
        sc.pos += 1
        name = sc.ident()
        if name is None or sc.text[sc.pos:sc.pos + 1] != "'":
            raise sc.error("malformed quoted label", start)
        sc.pos += 1
        return _make_label(sc, name, start, q)
    name = sc.ident()
    if name is None:
        found = sc.peek()
        raise sc.error(f"expected a term, found {found!r}" if found else "expected a term, found end of input")
    if name == "s" and sc.peek() == "{":
        sc.expect("{")
        index = read_ordinal(sc)
        sc.expect("}")
        sc.expect("(")
        sc.skip_ws()
        body_at = sc.pos
        body = _read_item(sc, q)
        if not body.is_tree:
            raise sc.error("the body of s{...}(...) must be a tree term", body_at, KindError)
        sc.expect(")")
        return SApp(index, body)
    if name in RESERVED_LABELS:
        raise sc.error(f"label {name!r} is reserved; write it quoted as '{name}'", start)
    return _make_label(sc, name, start, q)


def _make_label(sc: Scanner, name: str, at: int, q) -> Term:
    if q is not None and name not in q:
        raise UndeclaredLabelError(f"undeclared label {name!r} at position {at}")
    return Label(name)


# -- canonical forms and level membership -----------------------------------

def canonicalize(t: Term) -> Term:
    """Sort forest components by the syntactic order and drop exact duplicates, recursively."""
    if isinstance(t, Label):
        return t
    if isinstance(t, SApp):
        body = canonicalize(t.body)
        return t if body is t.body else SApp(t.index, body)
    if isinstance(t, Dot):
        head, tail = canonicalize(t.head), canonicalize(t.tail)
        return t if head is t.head and tail is t.tail else Dot(head, tail)
    kids = sorted({canonicalize(c) for c in t.children}, key=lambda c: c._sort_key)
    return Forest(kids)


def is_canonical(t: Term) -> bool:
    return canonicalize(t) is t


def in_level(t: Term, xi: OrdinalLike) -> bool:
    """Decide membership of ``t`` in the level-``xi`` forest class (finitary fragment).

    Level 0 holds labels and nonempty forests of labels. For ``xi = w^a + eta``
    an ``s_b`` application is admitted directly when ``b < a``, moves its body
    down to level ``eta`` when ``b == a``, and when ``b > a`` the whole term
    must already lie in level ``eta``.
    """
    return _in_level(t, ordinal(xi), {})


def _in_level(t: Term, xi: Ordinal, memo: dict) -> bool:
    key = (t.id, xi)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not xi:
        if isinstance(t, Label):
            result = True
        elif isinstance(t, Forest):
            result = bool(t.children) and all(isinstance(c, Label) for c in t.children)
        else:
            result = False
    elif isinstance(t, Label):
        result = True
    elif isinstance(t, Forest):
        result = all(_in_level(c, xi, memo) for c in t.children)
    elif isinstance(t, Dot):
        result = _in_level(t.head, xi, memo) and _in_level(t.tail, xi, memo)
    else:
        lead, rest = split_leading(xi)
        c = compare(t.index, lead)
        if c < 0:
            result = _in_level(t.body, xi, memo)
        elif c == 0:
            result = _in_level(t.body, rest, memo)
        else:
            result = _in_level(t, rest, memo)
    memo[key] = result
    return result


def subterms(t: Term) -> Iterator[Term]:
    """All subterm occurrences, pre-order."""
    yield t
    if isinstance(t, SApp):
        yield from subterms(t.body)
    elif isinstance(t, Dot):
        yield from subterms(t.head)
        yield from subterms(t.tail)
    elif isinstance(t, Forest):
        for c in t.children:
            yield from subterms(c)


def indices(t: Term) -> frozenset:
    return frozenset(s.index for s in subterms(t) if isinstance(s, SApp))


def as_forest(t: Term) -> Term:
    """View a tree as a one-component forest; forests pass through."""
    return t if t.is_forest else Forest((t,))


def chain_term(labels: Iterable[str]) -> Term:
    """The unary tree ``l0.[l1.[...]]`` reading labels root first."""
    labels = list(labels)
    if not labels:
        raise ValueError("a chain needs at least one label")
    t = Label(labels[-1])
    for name in reversed(labels[:-1]):
        t = Dot(Label(name), Forest((t,)))
    return t


__all__ = [
    "Term",
    "Label",
    "SApp",
    "Dot",
    "Forest",
    "EMPTY",
    "parse_term",
    "print_term",
    "canonicalize",
    "is_canonical",
    "in_level",
    "node_count",
    "check_labels",
    "subterms",
    "indices",
    "as_forest",
    "chain_term",
    "interned_count",
]
