"""Concrete finite labeled forests and a direct monotone-map test for the h-order.

This module deliberately ignores the recursive term rules in :mod:`hcalc`:
a level-1 term is unfolded into nodes with parent pointers and the order is
decided from the definition, i.e. by searching for a map ``phi`` from the
nodes of ``F`` to the nodes of ``G`` that preserves ancestor-or-equal and
weakly increases labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import LevelError
from .ordinals import ZERO
from .qo import QOrder
from .terms import Dot, Forest, Label, SApp, Term, in_level


@dataclass(frozen=True)
class LabeledForest:
    labels: tuple
    parent: tuple  # parent[i] is None for roots

    def __post_init__(self):
        if len(self.labels) != len(self.parent):
            raise ValueError("labels and parent must have equal length")
        for i in range(len(self.parent)):
            seen = set()
            j = i
            while j is not None:
                if j in seen:
                    raise ValueError("parent relation has a cycle")
                seen.add(j)
                j = self.parent[j]
                if j is not None and not 0 <= j < len(self.parent):
                    raise ValueError(f"parent index {j} out of range")

    def __len__(self):
        return len(self.labels)

    @cached_property
    def children(self) -> tuple:
        kids = [[] for _ in self.labels]
        for i, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(i)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def roots(self) -> tuple:
        return tuple(i for i, p in enumerate(self.parent) if p is None)

    @cached_property
    def descendants(self) -> tuple:
        """``descendants[i]``: nodes at or below ``i``."""
        out = []
        for i in range(len(self.labels)):
            stack, acc = [i], []
            while stack:
                j = stack.pop()
                acc.append(j)
                stack.extend(self.children[j])
            out.append(tuple(sorted(acc)))
        return tuple(out)

    def is_ancestor_or_equal(self, x: int, y: int) -> bool:
        while y is not None:
            if y == x:
                return True
            y = self.parent[y]
        return False


def _constant_label(t: Term) -> str:
    if isinstance(t, Label):
        return t.name
    if isinstance(t, SApp) and t.index == ZERO and isinstance(t.body, Label):
        return t.body.name
    raise LevelError(f"{t} is not a level-1 node label (only q and s{{0}}(q) are)")


def to_labeled_forest(t: Term) -> LabeledForest:
    if not in_level(t, 1):
        raise LevelError(f"{t} is not a level-1 term")
    labels: list = []
    parent: list = []

    def tree(node: Term, up):
        if isinstance(node, Dot):
            me = tree(node.head, up)
            for c in node.tail.children:
                tree(c, me)
            return me
        labels.append(_constant_label(node))
        parent.append(up)
        return len(labels) - 1

    if isinstance(t, Forest):
        for c in t.children:
            tree(c, None)
    else:
        tree(t, None)
    return LabeledForest(tuple(labels), tuple(parent))


def hom_leq(q: QOrder, f: LabeledForest, g: LabeledForest) -> bool:
    """Is there a monotone, label-increasing map from ``f`` into ``g``?

    Component roots may land on any node of ``g``; each child of ``x`` must land
    at or below the image of ``x``. The search is memoized on (node of f, node of g).
    """
    memo: dict = {}
    g_all = range(len(g))

    def fits(x: int, y: int) -> bool:
        key = (x, y)
        if key in memo:
            return memo[key]
        ok = q.leq(f.labels[x], g.labels[y]) and all(
            any(fits(c, z) for z in g.descendants[y]) for c in f.children[x]
        )
        memo[key] = ok
        return ok

    return all(any(fits(r, y) for y in g_all) for r in f.roots)


def hom_leq_exhaustive(q: QOrder, f: LabeledForest, g: LabeledForest):
    """Try every function nodes(f) -> nodes(g); return a witness map or None. Tiny inputs only."""
    n = len(f)
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y and f.is_ancestor_or_equal(x, y)]
    for phi in product(range(len(g)), repeat=n):
        if not all(q.leq(f.labels[x], g.labels[phi[x]]) for x in range(n)):
            continue
        if all(g.is_ancestor_or_equal(phi[x], phi[y]) for x, y in pairs):
            return phi
    return None


def oracle_leq(q: QOrder, t: Term, s: Term) -> bool:
    return hom_leq(q, to_labeled_forest(t), to_labeled_forest(s))
