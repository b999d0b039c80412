from __future__ import annotations

from itertools import product

import networkx as nx
import pytest

from forestcalc.errors import EnumerationLimitError
from forestcalc.explore import (
    default_indices,
    enumerate_terms,
    hasse_dot,
    quotient,
    report,
    retraction_class_map,
    transitive_reduction,
)
from forestcalc.hcalc import equiv_h, leq_h
from forestcalc.ordinals import ordinal
from forestcalc.qo import antichain, chain
from forestcalc.terms import Label, in_level, indices, is_canonical, node_count, parse_term, print_term, subterms
from termgen import chains, naive_level_terms

CHAIN_DOT = """digraph degrees {
  rankdir=BT;
  n0 [label="a"];
  n1 [label="b"];
  n2 [label="a.[b]"];
  n3 [label="b.[a]"];
  n4 [label="a.[b.[a]]"];
  n5 [label="b.[a.[b]]"];
  n0 -> n2;
  n0 -> n3;
  n1 -> n2;
  n1 -> n3;
  n2 -> n4;
  n2 -> n5;
  n3 -> n4;
  n3 -> n5;
}
"""


def test_enumerate_examples(anti2):
    assert enumerate_terms(anti2, 0, 1) == [Label("a"), Label("b")]
    level0 = enumerate_terms(anti2, 0, 4, 2)
    assert parse_term("[a,b]") in level0
    assert parse_term("a.[b]") not in level0


def test_enumerate_golden_count(anti2):
    ts = enumerate_terms(anti2, 1, 4, 2)
    assert len(ts) == 24
    assert set(ts) == naive_level_terms("ab", default_indices(1), ordinal(1), 4, 2)


@pytest.mark.parametrize("xi", ["0", "1", "2", "w", "w+1"])
@pytest.mark.parametrize("q", [antichain("ab"), chain("ab")], ids=["anti2", "chain2"])
def test_level_aware_matches_naive(q, xi):
    xi = ordinal(xi)
    ts = enumerate_terms(q, xi, 5, 2)
    assert len(ts) == len(set(ts))
    assert set(ts) == naive_level_terms(q.labels, default_indices(xi), xi, 5, 2)


def test_enumeration_contract(anti2):
    ts = enumerate_terms(anti2, ordinal("w"), 6, 3, index_cap=0, indices=[0, 1])
    assert ts == sorted(ts, key=lambda t: (t.size, t.sort_key))
    for t in ts:
        assert is_canonical(t) and in_level(t, ordinal("w")) and node_count(t) <= 6
        assert all(len(s.children) <= 3 for s in subterms(t) if s.is_forest)
        assert indices(t) <= {ordinal(0)}
    assert ts == enumerate_terms(anti2, ordinal("w"), 6, 3, index_cap=0, indices=[0, 1])


def test_enumeration_limit(anti2):
    with pytest.raises(EnumerationLimitError):
        enumerate_terms(anti2, 1, 7, 3, limit=50)
    with pytest.raises(ValueError):
        enumerate_terms(anti2, 1, 0)


def test_quotient_level0(anti2):
    p = quotient(anti2, enumerate_terms(anti2, 0, 4, 2, kinds="forests"))
    assert [print_term(r) for r in p.representatives] == ["[a]", "[b]", "[a,b]"]
    assert p.hasse == ((0, 2), (1, 2))
    dot = hasse_dot(p)
    assert dot.count("->") == 2 and dot.count("-> n2") == 2


def test_quotient_chains(anti2):
    p = quotient(anti2, chains("ab", 3))
    assert len(p) == 6
    assert sum(len(c) for c in p.classes) == 14
    assert hasse_dot(p) == CHAIN_DOT
    assert hasse_dot(quotient(anti2, chains("ab", 3))) == CHAIN_DOT
    assert report(p).splitlines() == [
        "0 a covers:",
        "1 b covers:",
        "2 a.[b] covers: 0 1",
        "3 b.[a] covers: 0 1",
        "4 a.[b.[a]] covers: 2 3",
        "5 b.[a.[b]] covers: 2 3",
    ]
    assert p.class_of(parse_term("a.[a.[b]]")) == 2


def test_quotient_single_term(anti2):
    p = quotient(anti2, [parse_term("a.[b]")])
    assert len(p) == 1 and p.hasse == ()
    assert hasse_dot(p) == 'digraph degrees {\n  rankdir=BT;\n  n0 [label="a.[b]"];\n}\n'


def test_quotient_invariants(chain2):
    ts = enumerate_terms(chain2, 1, 5, 2)
    p = quotient(chain2, ts)
    assert sorted(t.id for c in p.classes for t in c) == sorted(t.id for t in ts)
    for c in p.classes:
        assert min(c, key=lambda t: t.sort_key) is c[0]
        assert all(equiv_h(chain2, c[0], t) for t in c)
    reps = p.representatives
    for i, j in product(range(len(p)), repeat=2):
        if i != j:
            assert not equiv_h(chain2, reps[i], reps[j])
            assert ((i, j) in p.strict_leq) == leq_h(chain2, reps[i], reps[j])
    g = nx.DiGraph(p.strict_leq)
    g.add_nodes_from(range(len(p)))
    assert nx.is_directed_acyclic_graph(g)
    assert set(p.hasse) == set(nx.transitive_reduction(g).edges)
    closure = nx.transitive_closure_dag(nx.DiGraph(list(p.hasse)))
    assert set(closure.edges) == set(p.strict_leq)


def test_transitive_reduction_small():
    assert transitive_reduction(3, {(0, 1), (1, 2), (0, 2)}) == ((0, 1), (1, 2))
    assert transitive_reduction(2, set()) == ()


def test_dot_is_deterministic(anti2):
    ts = enumerate_terms(anti2, 1, 5, 2)
    first = hasse_dot(quotient(anti2, ts))
    second = hasse_dot(quotient(anti2, list(reversed(ts))))
    assert first == second


def test_dot_escapes_quotes():
    q = antichain(["s"])
    p = quotient(q, [parse_term("'s'")])
    assert "label=\"'s'\"" in hasse_dot(p)


def test_relation_names(anti2):
    ts = [parse_term(x) for x in ("a", "s{0}(a)", "a.[b]", "[a,b]")]
    assert len(quotient(anti2, ts, "h")) == 3
    assert len(quotient(anti2, ts, "hxi:1")) == 2
    with pytest.raises(ValueError):
        quotient(anti2, ts, "bogus")


def test_retraction_class_map(anti2):
    upper = quotient(anti2, enumerate_terms(anti2, 2, 4, 2), "hxi:1")
    lower = quotient(anti2, enumerate_terms(anti2, 1, 4, 4))
    m = retraction_class_map(anti2, 1, upper, lower)
    assert len(m) == len(upper)
    assert len(set(m.values())) == len(m)
