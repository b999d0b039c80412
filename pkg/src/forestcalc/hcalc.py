"""Decision procedure for the homomorphism quasiorder on terms.

Rules, applied top-down (``X·∅`` is identified with the singleton ``X``):

* forest on the left: every component must be below the right side;
* tree vs forest: the tree must be below some component (never below ``[]``);
* ``A·B`` vs ``C·D``: if ``A <= C`` then ``B <= C·D``, otherwise ``A·B <= D``;
* ``A·B`` vs singleton ``Y``: ``A <= Y`` and ``B <= Y``;
* singleton ``X`` vs ``C·D``: ``X <= C`` or ``X <= D``;
* labels compare in Q; a label against ``s_b(V)`` compares against ``V`` (and
  symmetrically), since ``p`` and ``s_b(p)`` are identified;
* ``s_a(U)`` vs ``s_b(V)``: ``U <= V`` if ``a = b``, ``s_a(U) <= V`` if ``a > b``,
  ``U <= s_b(V)`` if ``a < b``.

Every rule recurses on a pair whose total node count is strictly smaller.
"""

from __future__ import annotations

from typing import Callable

from .ordinals import compare
from .qo import QOrder
from .terms import Dot, Forest, Label, Term, check_labels


def _step(q: QOrder, t: Term, s: Term, rec: Callable[[Term, Term], bool]) -> bool:
    if isinstance(t, Forest):
        return all(rec(c, s) for c in t.children)
    if isinstance(s, Forest):
        return any(rec(t, d) for d in s.children)
    if isinstance(t, Dot):
        if isinstance(s, Dot):
            if rec(t.head, s.head):
                return rec(t.tail, s)
            return rec(t, s.tail)
        return rec(t.head, s) and rec(t.tail, s)
    if isinstance(s, Dot):
        return rec(t, s.head) or rec(t, s.tail)
    if isinstance(t, Label):
        if isinstance(s, Label):
            return q.leq(t.name, s.name)
        return rec(t, s.body)
    if isinstance(s, Label):
        return rec(t.body, s)
    c = compare(t.index, s.index)
    if c == 0:
        return rec(t.body, s.body)
    if c > 0:
        return rec(t, s.body)
    return rec(t.body, s)


def _memo_leq(q: QOrder, t: Term, s: Term) -> bool:
    memo = q.memo
    key = (t.id, s.id)
    hit = memo.get(key)
    if hit is None:
        hit = _step(q, t, s, lambda x, y: _memo_leq(q, x, y))
        memo[key] = hit
    return hit


def leq_h(q: QOrder, t: Term, s: Term) -> bool:
    check_labels(t, q)
    check_labels(s, q)
    return _memo_leq(q, t, s)


def leq_h_nomemo(q: QOrder, t: Term, s: Term) -> bool:
    """Memo-free evaluation that also asserts the recursion measure strictly decreases."""
    check_labels(t, q)
    check_labels(s, q)
    return _fueled(q, t, s)


def _fueled(q: QOrder, t: Term, s: Term) -> bool:
    fuel = t.size + s.size

    def rec(x: Term, y: Term) -> bool:
        if x.size + y.size >= fuel:
            raise AssertionError(f"non-decreasing recursion: ({t}, {s}) -> ({x}, {y})")
        return _fueled(q, x, y)

    return _step(q, t, s, rec)


def equiv_h(q: QOrder, t: Term, s: Term) -> bool:
    return leq_h(q, t, s) and leq_h(q, s, t)


def lt_h(q: QOrder, t: Term, s: Term) -> bool:
    return leq_h(q, t, s) and not leq_h(q, s, t)


def is_join_irreducible(q: QOrder, f: Term) -> bool:
    """True iff ``f`` is h-equivalent to a tree term.

    A finite forest is equivalent to a tree exactly when it lies below one of
    its own components; the empty forest never is.
    """
    check_labels(f, q)
    if f.is_tree:
        return True
    return any(_memo_leq(q, f, c) for c in f.children)
