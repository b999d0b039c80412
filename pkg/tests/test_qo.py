from __future__ import annotations

import json
from itertools import chain as iter_chain, combinations, product

import pytest

from forestcalc.errors import QOError, UndeclaredLabelError
from forestcalc.qo import all_quasiorders, antichain, chain, dominates, dump_qo, leq_q, load_qo, make_qo, read_qo


def nonempty_subsets(labels):
    return [frozenset(c) for k in range(1, len(labels) + 1) for c in combinations(labels, k)]


def test_load_antichain():
    q = load_qo({"labels": ["a", "b"], "leq": []})
    assert q.pairs == {("a", "a"), ("b", "b")}


def test_load_chain():
    q = load_qo({"labels": ["a", "b"], "leq": [["a", "b"]]})
    assert leq_q(q, "a", "b") and not leq_q(q, "b", "a")


def test_load_closes_transitively():
    q = load_qo({"labels": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})
    assert ("a", "c") in q.pairs
    assert len(q.pairs) == 6


def test_load_errors():
    with pytest.raises(QOError, match="unknown label"):
        load_qo({"labels": ["a"], "leq": [["a", "z"]]})
    with pytest.raises(QOError, match="duplicate"):
        load_qo({"labels": ["a", "a"], "leq": []})
    with pytest.raises(QOError):
        load_qo({"labels": ["1x"], "leq": []})
    with pytest.raises(QOError):
        load_qo("{not json")
    with pytest.raises(QOError):
        load_qo({"labels": ["a"], "leq": [], "extra": 1})


def test_leq_q_examples(anti2, chain2):
    assert leq_q(anti2, "a", "a")
    assert not leq_q(anti2, "a", "b")
    assert leq_q(chain2, "a", "b")
    with pytest.raises(UndeclaredLabelError):
        leq_q(anti2, "a", "c")


def test_dominates_examples(anti2, chain2):
    assert dominates(anti2, {"a"}, {"a", "b"})
    assert not dominates(anti2, {"a", "b"}, {"a"})
    # chain a<=b: a<=b and b<=b
    assert dominates(chain2, {"a", "b"}, {"b"})
    with pytest.raises(ValueError):
        dominates(anti2, set(), {"a"})


def test_cycle_generators_give_equivalent_labels():
    q = make_qo(["a", "b"], [("a", "b"), ("b", "a")])
    assert q.leq("a", "b") and q.leq("b", "a")


def test_file_round_trip_is_byte_stable(tmp_path):
    q = load_qo({"labels": ["x", "y", "z"], "leq": [["x", "y"], ["y", "z"]]})
    text = dump_qo(q)
    assert json.loads(text) == {"labels": ["x", "y", "z"], "leq": [["x", "y"], ["x", "z"], ["y", "z"]]}
    path = tmp_path / "q.qo"
    path.write_text(text, encoding="utf-8")
    again = read_qo(path)
    assert again == q
    assert dump_qo(again) == text


def test_all_quasiorders_count():
    # labelled preorders on n points: 1, 4, 29
    assert [len(list(all_quasiorders("abc"[:n]))) for n in (1, 2, 3)] == [1, 4, 29]


def _four_label_orders():
    yield antichain("abcd")
    yield chain("abcd")
    yield make_qo("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    yield make_qo("abcd", [("a", "b"), ("b", "a"), ("c", "d")])


@pytest.mark.parametrize("q", list(iter_chain(all_quasiorders("abc"), _four_label_orders())), ids=str)
def test_dominates_is_a_quasiorder(q):
    subsets = nonempty_subsets(q.labels)
    rel = {(s, r): dominates(q, s, r) for s, r in product(subsets, repeat=2)}
    assert all(rel[s, s] for s in subsets)
    for s, r, t in product(subsets, repeat=3):
        if rel[s, r] and rel[r, t]:
            assert rel[s, t]
