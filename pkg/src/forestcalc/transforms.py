"""Section operators ``s_a``, ``s*_xi`` and retractions ``r_a``, ``r*_xi``.

``s*_xi`` for ``xi = w^a0 + ... + w^am`` is ``s_a0 ∘ ... ∘ s_am`` (``s_am``
applied first); ``r*_xi`` is ``r_am ∘ ... ∘ r_a0`` (``r_a0`` applied first), so
``r*_xi(s*_xi(t)) == t``. Both act componentwise on forests.
"""

from __future__ import annotations

from .hcalc import leq_h
from .ordinals import Ordinal, OrdinalLike, compare, ordinal, summands
from .qo import QOrder
from .terms import Dot, Forest, Label, SApp, Term


def apply_s(alpha: OrdinalLike, t: Term) -> Term:
    alpha = ordinal(alpha)
    if t.is_forest:
        return Forest(SApp(alpha, c) for c in t.children)
    return SApp(alpha, t)


def apply_s_star(xi: OrdinalLike, t: Term) -> Term:
    xi = ordinal(xi)
    if not xi:
        return t
    for alpha in reversed(summands(xi)):
        t = apply_s(alpha, t)
    return t


def _components(t: Term) -> tuple:
    return t.children if t.is_forest else (t,)


def apply_r(alpha: OrdinalLike, t: Term) -> Term:
    return _retract(ordinal(alpha), t, {})


def _retract(alpha: Ordinal, t: Term, memo: dict) -> Term:
    hit = memo.get(t.id)
    if hit is not None:
        return hit
    if isinstance(t, Label):
        out = t
    elif isinstance(t, Forest):
        out = Forest(c for child in t.children for c in _components(_retract(alpha, child, memo)))
    elif isinstance(t, Dot):
        head, tail = _retract(alpha, t.head, memo), _retract(alpha, t.tail, memo)
        out = Forest((*_components(head), *_components(tail)))
    else:
        c = compare(alpha, t.index)
        if c > 0:
            out = _retract(alpha, t.body, memo)
        elif c == 0:
            out = t.body
        else:
            out = t
    memo[t.id] = out
    return out


def apply_r_star(xi: OrdinalLike, t: Term) -> Term:
    xi = ordinal(xi)
    if not xi:
        return t
    for alpha in summands(xi):
        t = apply_r(alpha, t)
    return t


def leq_h_xi(xi: OrdinalLike, q: QOrder, t: Term, s: Term) -> bool:
    """Induced quasiorder: compare the ``r*_xi`` images under the h-order."""
    return leq_h(q, apply_r_star(xi, t), apply_r_star(xi, s))


def equiv_h_xi(xi: OrdinalLike, q: QOrder, t: Term, s: Term) -> bool:
    rt, rs = apply_r_star(xi, t), apply_r_star(xi, s)
    return leq_h(q, rt, rs) and leq_h(q, rs, rt)
