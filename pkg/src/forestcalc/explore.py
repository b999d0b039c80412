"""Bounded enumeration of canonical terms and their degree posets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import EnumerationLimitError
from .hcalc import leq_h
from .ordinals import Ordinal, OrdinalLike, ZERO, exponents, ordinal, split_leading
from .qo import QOrder
from .terms import Dot, Forest, Label, SApp, Term, print_term
from .transforms import apply_r_star

DEFAULT_LIMIT = 250_000


def default_indices(xi: OrdinalLike) -> tuple:
    """Index alphabet used when none is given: 0 and the CNF exponents of ``xi``."""
    xi = ordinal(xi)
    return tuple(sorted({ZERO, *exponents(xi)}))


def term_order_key(t: Term) -> tuple:
    return (t.size, t.sort_key)


class _Generator:
    def __init__(self, q: QOrder, max_nodes: int, max_branch: int, alphabet: Sequence[Ordinal], limit: int):
        self.labels = sorted(Label(name) for name in q.labels)
        self.max_nodes = max_nodes
        self.max_branch = max_branch
        self.alphabet = tuple(sorted(set(alphabet)))
        self.limit = limit
        self._singles: dict = {}
        self._dots: dict = {}
        self._forests: dict = {}

    def _guard(self, items: list) -> list:
        if len(items) > self.limit:
            raise EnumerationLimitError(f"enumeration exceeded the limit of {self.limit} terms")
        return items

    def singletons(self, level: Ordinal, n: int) -> list:
        key = (level, n)
        if key in self._singles:
            return self._singles[key]
        out: list = []
        if n == 1:
            out = list(self.labels)
        elif level:
            lead, rest = split_leading(level)
            for beta in self.alphabet:
                if beta < lead:
                    out.extend(SApp(beta, u) for u in self.trees(level, n - 1))
                elif beta == lead:
                    out.extend(SApp(beta, u) for u in self.trees(rest, n - 1))
                else:
                    out.extend(t for t in self.singletons(rest, n) if isinstance(t, SApp) and t.index == beta)
        out.sort(key=lambda t: t.sort_key)
        self._singles[key] = self._guard(out)
        return out

    def dots(self, level: Ordinal, n: int) -> list:
        key = (level, n)
        if key in self._dots:
            return self._dots[key]
        out: list = []
        if level:
            for i in range(1, n - 1):
                for tail in self.forests(level, n - 1 - i):
                    out.extend(Dot(head, tail) for head in self.singletons(level, i))
        out.sort(key=lambda t: t.sort_key)
        self._dots[key] = self._guard(out)
        return out

    def trees(self, level: Ordinal, n: int) -> list:
        return self.singletons(level, n) + self.dots(level, n)

    def forests(self, level: Ordinal, n: int) -> list:
        key = (level, n)
        if key in self._forests:
            return self._forests[key]
        if not level:
            pool = [(t, 1) for t in self.labels]
        else:
            pool = [(t, m) for m in range(1, n) for t in self.trees(level, m)]
            pool.sort(key=lambda tm: tm[0].sort_key)
        out: list = []
        budget = n - 1

        def extend(start: int, chosen: list, used: int):
            if used == budget:
                if chosen or level:
                    out.append(Forest(chosen))
                    self._guard(out)
                return
            if len(chosen) == self.max_branch:
                return
            for i in range(start, len(pool)):
                t, m = pool[i]
                if used + m <= budget:
                    chosen.append(t)
                    extend(i + 1, chosen, used + m)
                    chosen.pop()

        extend(0, [], 0)
        out.sort(key=lambda t: t.sort_key)
        self._forests[key] = out
        return out


def enumerate_terms(
    q: QOrder,
    xi: OrdinalLike,
    max_nodes: int,
    max_branch: int = 2,
    index_cap: OrdinalLike | None = None,
    *,
    indices: Iterable[OrdinalLike] | None = None,
    limit: int = DEFAULT_LIMIT,
    kinds: str = "all",
) -> list:
    """All canonical terms of level ``xi`` with at most ``max_nodes`` nodes.

    Forests have at most ``max_branch`` components. ``s`` indices come from
    ``indices`` (default :func:`default_indices`), restricted to ``<= index_cap``.
    ``kinds`` is ``"all"``, ``"trees"`` or ``"forests"``. Output is sorted by
    node count, then the syntactic order.
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    if max_branch < 0:
        raise ValueError("max_branch must be non-negative")
    xi = ordinal(xi)
    alphabet = [ordinal(a) for a in indices] if indices is not None else list(default_indices(xi))
    if index_cap is not None:
        cap = ordinal(index_cap)
        alphabet = [a for a in alphabet if a <= cap]
    gen = _Generator(q, max_nodes, max_branch, alphabet, limit)
    out: list = []
    for n in range(1, max_nodes + 1):
        if kinds in ("all", "trees"):
            out.extend(gen.trees(xi, n))
        if kinds in ("all", "forests"):
            out.extend(gen.forests(xi, n))
        if len(out) > limit:
            raise EnumerationLimitError(f"enumeration exceeded the limit of {limit} terms")
    out.sort(key=term_order_key)
    return out


# -- degree posets ------------------------------------------------------------

@dataclass(frozen=True)
class DegreePoset:
    classes: tuple        # tuples of Terms; member 0 (least in the syntactic order) is the representative
    strict_leq: frozenset  # pairs (i, j): class i strictly below class j
    hasse: tuple          # sorted covering pairs (i, j): j covers i

    def __len__(self):
        return len(self.classes)

    @property
    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    def class_of(self, t: Term) -> int:
        for i, members in enumerate(self.classes):
            if t in members:
                return i
        raise KeyError(print_term(t))

    def covers(self, j: int) -> tuple:
        """Indices of the classes that ``j`` covers."""
        return tuple(i for i, k in self.hasse if k == j)


def relation_h(q: QOrder) -> Callable[[Term, Term], bool]:
    return lambda t, s: leq_h(q, t, s)


def relation_h_xi(q: QOrder, xi: OrdinalLike) -> Callable[[Term, Term], bool]:
    xi = ordinal(xi)
    cache: dict = {}

    def image(t: Term) -> Term:
        r = cache.get(t.id)
        if r is None:
            r = cache[t.id] = apply_r_star(xi, t)
        return r

    return lambda t, s: leq_h(q, image(t), image(s))


def parse_relation(q: QOrder, name: str | None) -> Callable[[Term, Term], bool]:
    """``"h"`` or ``"hxi:ORD"``."""
    if name in (None, "h"):
        return relation_h(q)
    if name.startswith("hxi:"):
        return relation_h_xi(q, ordinal(name[4:]))
    raise ValueError(f"unknown relation {name!r}; expected 'h' or 'hxi:ORD'")


def transitive_reduction(n: int, strict: Iterable[tuple]) -> tuple:
    strict = set(strict)
    above = [set() for _ in range(n)]
    for i, j in strict:
        above[i].add(j)
    cover = []
    for i, j in strict:
        if not any(k in above[i] and j in above[k] for k in above[i]):
            cover.append((i, j))
    return tuple(sorted(cover))


def quotient(q: QOrder, terms: Sequence[Term], relation: str | Callable | None = None) -> DegreePoset:
    """Collapse mutually related terms into classes and order the classes.

    ``relation`` is a callable ``(t, s) -> bool`` or a name understood by
    :func:`parse_relation` (default: the h-order).
    """
    rel = relation if callable(relation) else parse_relation(q, relation)
    terms = sorted(dict.fromkeys(terms), key=term_order_key)
    reps: list = []
    members: list = []
    for t in terms:
        for i, r in enumerate(reps):
            if rel(t, r) and rel(r, t):
                members[i].append(t)
                break
        else:
            reps.append(t)
            members.append([t])
    groups = [sorted(m, key=lambda t: t.sort_key) for m in members]
    groups.sort(key=lambda m: term_order_key(m[0]))
    reps = [m[0] for m in groups]
    n = len(reps)
    strict = frozenset(
        (i, j) for i in range(n) for j in range(n) if i != j and rel(reps[i], reps[j])
    )
    classes = tuple(tuple(m) for m in groups)
    return DegreePoset(classes, strict, transitive_reduction(n, strict))


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def hasse_dot(p: DegreePoset, name: str = "degrees") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, rep in enumerate(p.representatives):
        lines.append(f'  n{i} [label="{_dot_escape(print_term(rep))}"];')
    for i, j in p.hasse:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report(p: DegreePoset) -> str:
    lines = []
    for j, rep in enumerate(p.representatives):
        below = " ".join(str(i) for i in p.covers(j))
        lines.append(f"{j} {print_term(rep)} covers: {below}".rstrip())
    return "\n".join(lines) + "\n"


def retraction_class_map(q: QOrder, xi: OrdinalLike, upper: DegreePoset, lower: DegreePoset) -> dict:
    """Map each class of ``upper`` to the class of ``lower`` that contains its ``r*_xi`` image.

    Classes whose image is equivalent to no class of ``lower`` are left out.
    """
    xi = ordinal(xi)
    mapping = {}
    lower_reps = lower.representatives
    for i, rep in enumerate(upper.representatives):
        img = apply_r_star(xi, rep)
        for j, r in enumerate(lower_reps):
            if leq_h(q, img, r) and leq_h(q, r, img):
                mapping[i] = j
                break
    return mapping
