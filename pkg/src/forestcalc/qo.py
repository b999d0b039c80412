"""Finite quasiorders used as label alphabets, and the domination order on label sets.

A Q-definition file is JSON with two keys::

    {"labels": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]}

``leq`` lists generator pairs; the stored relation is their reflexive-transitive
closure. :func:`dump_qo` writes the closed relation (minus reflexive pairs) in
declaration order, so ``dump_qo(load_qo(dump_qo(q))) == dump_qo(q)`` byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable

from ._scan import is_identifier
from .errors import QOError, UndeclaredLabelError


@dataclass(frozen=True, eq=False)
class QOrder:
    labels: tuple
    pairs: frozenset
    # Per-order memo for leq_h, keyed by (term id, term id).
    memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.labels)})
        if len(self._index) != len(self.labels):
            raise QOError("duplicate label declaration")
        for p, r in self.pairs:
            if p not in self._index or r not in self._index:
                raise QOError(f"pair ({p}, {r}) uses an undeclared label")
        for p in self.labels:
            if (p, p) not in self.pairs:
                raise QOError(f"relation is not reflexive at {p!r}")
        for (p, r), (r2, s) in product(self.pairs, self.pairs):
            if r == r2 and (p, s) not in self.pairs:
                raise QOError(f"relation is not transitive: {p}<={r}<={s}")

    def __eq__(self, other):
        if not isinstance(other, QOrder):
            return NotImplemented
        return self.labels == other.labels and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.labels, self.pairs))

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.labels)

    def check(self, label: str) -> None:
        if label not in self._index:
            raise UndeclaredLabelError(f"undeclared label {label!r}")

    def leq(self, p: str, r: str) -> bool:
        return (p, r) in self.pairs

    def clear_memo(self) -> None:
        self.memo.clear()


def closure(labels: Iterable[str], generators: Iterable[tuple]) -> frozenset:
    """Reflexive-transitive closure (Warshall) of ``generators`` over ``labels``."""
    labels = list(labels)
    index = {name: i for i, name in enumerate(labels)}
    n = len(labels)
    reach = [[i == j for j in range(n)] for i in range(n)]
    for p, r in generators:
        reach[index[p]][index[r]] = True
    for k in range(n):
        row_k = reach[k]
        for i in range(n):
            if reach[i][k]:
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return frozenset((labels[i], labels[j]) for i in range(n) for j in range(n) if reach[i][j])


def make_qo(labels: Iterable[str], generators: Iterable[tuple] = ()) -> QOrder:
    labels = list(labels)
    seen = set()
    for name in labels:
        if not isinstance(name, str) or not is_identifier(name):
            raise QOError(f"label {name!r} is not an identifier")
        if name in seen:
            raise QOError(f"duplicate label {name!r}")
        seen.add(name)
    gens = []
    for pair in generators:
        if len(pair) != 2:
            raise QOError(f"generator {pair!r} is not a pair")
        p, r = pair
        for name in (p, r):
            if name not in seen:
                raise QOError(f"unknown label {name!r} in pair {list(pair)!r}")
        gens.append((p, r))
    return QOrder(tuple(labels), closure(labels, gens))


def antichain(labels: Iterable[str]) -> QOrder:
    return make_qo(labels)


def chain(labels: Iterable[str]) -> QOrder:
    labels = list(labels)
    return make_qo(labels, zip(labels, labels[1:]))


def load_qo(source) -> QOrder:
    """Build a QOrder from a mapping, a JSON string, or a path to a JSON file."""
    if isinstance(source, Path):
        source = source.read_text(encoding="utf-8")
    if isinstance(source, str):
        try:
            source = json.loads(source)
        except json.JSONDecodeError as exc:
            raise QOError(f"Q-definition is not valid JSON: {exc}") from exc
    if not isinstance(source, dict):
        raise QOError("Q-definition must be an object with 'labels' and 'leq'")
    unknown = set(source) - {"labels", "leq"}
    if unknown:
        raise QOError(f"unexpected keys in Q-definition: {sorted(unknown)}")
    labels = source.get("labels")
    if not isinstance(labels, list):
        raise QOError("'labels' must be an array of identifiers")
    gens = source.get("leq", [])
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise QOError("'leq' must be an array of two-element arrays")
    return make_qo(labels, [tuple(g) for g in gens])


def read_qo(path) -> QOrder:
    return load_qo(Path(path))


def dump_qo(q: QOrder) -> str:
    order = {name: i for i, name in enumerate(q.labels)}
    pairs = sorted((p, r) for p, r in q.pairs if p != r)
    pairs.sort(key=lambda pr: (order[pr[0]], order[pr[1]]))
    doc = {"labels": list(q.labels), "leq": [list(pr) for pr in pairs]}
    return json.dumps(doc, indent=2) + "\n"


def leq_q(q: QOrder, p: str, r: str) -> bool:
    q.check(p)
    q.check(r)
    return q.leq(p, r)


def dominates(q: QOrder, small: Iterable[str], big: Iterable[str]) -> bool:
    """Domination order on nonempty label sets: every element of ``small`` lies below some element of ``big``."""
    small, big = set(small), set(big)
    if not small or not big:
        raise ValueError("dominates is defined on nonempty label sets only")
    for name in small | big:
        q.check(name)
    return all(any(q.leq(s, r) for r in big) for s in small)


def all_quasiorders(labels: Iterable[str]):
    """Every quasiorder on ``labels`` (exhaustive; intended for three or fewer labels)."""
    labels = list(labels)
    off_diag = [(p, r) for p in labels for r in labels if p != r]
    seen = set()
    for mask in range(1 << len(off_diag)):
        gens = [off_diag[i] for i in range(len(off_diag)) if mask >> i & 1]
        rel = closure(labels, gens)
        if rel in seen:
            continue
        seen.add(rel)
        yield QOrder(tuple(labels), rel)
