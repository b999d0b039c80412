from __future__ import annotations

import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings

from forestcalc.errors import UndeclaredLabelError
from forestcalc.explore import enumerate_terms
from forestcalc.hcalc import _step, equiv_h, is_join_irreducible, leq_h, leq_h_nomemo, lt_h
from forestcalc.ordinals import OMEGA, ordinal
from forestcalc.qo import all_quasiorders, antichain, chain, dominates
from forestcalc.terms import EMPTY, Forest, Label, SApp, canonicalize, parse_term
from termgen import random_term, terms


@pytest.fixture(scope="module")
def pool():
    q = antichain("ab")
    return q, enumerate_terms(q, OMEGA, 5, 2, indices=[0, 1, "w"])


def test_examples(anti2, parse):
    assert leq_h(anti2, Label("a"), Label("a"))
    assert leq_h(anti2, parse("a.[b]"), parse("a.[b.[a]]"))
    assert not leq_h(anti2, parse("a.[b.[a]]"), parse("a.[b]"))
    assert leq_h(anti2, parse("s{0}(a)"), parse("s{1}(a)"))


def test_equiv_examples(anti2, parse):
    assert equiv_h(anti2, parse("a"), parse("s{3}(a)"))
    assert not equiv_h(anti2, parse("a"), parse("b"))
    assert equiv_h(anti2, parse("s{0}(s{1}(a.[b]))"), parse("s{1}(a.[b])"))


def test_irreducible_examples(anti2, parse):
    assert not is_join_irreducible(anti2, parse("[a,b]"))
    assert is_join_irreducible(anti2, parse("[a,a]"))
    assert is_join_irreducible(anti2, parse("a.[b]"))
    assert not is_join_irreducible(anti2, parse("[]"))
    # a forest dominated by one component is equivalent to it
    assert is_join_irreducible(anti2, parse("[a,a.[b]]"))


def test_irreducible_agrees_with_definition(pool):
    q, ts = pool
    trees = [t for t in ts if t.is_tree]
    for f in ts:
        if f.is_forest:
            expected = any(equiv_h(q, f, t) for t in trees if t.size <= f.size)
            assert is_join_irreducible(q, f) == expected, f


def test_empty_forest_conventions(pool):
    q, ts = pool
    for t in ts:
        assert leq_h(q, EMPTY, t)
        assert leq_h(q, t, EMPTY) == (t is EMPTY)


def test_chain_labels(chain2, parse):
    assert leq_h(chain2, parse("a.[a]"), parse("b.[b]"))
    assert not leq_h(chain2, parse("b"), parse("a.[a]"))
    assert lt_h(chain2, parse("a"), parse("b"))


def test_undeclared_label_rejected(anti2):
    with pytest.raises(UndeclaredLabelError):
        leq_h(anti2, Label("a"), Label("z"))
    with pytest.raises(UndeclaredLabelError):
        is_join_irreducible(anti2, Forest([Label("z")]))


def test_reflexive(pool):
    q, ts = pool
    assert all(leq_h_nomemo(q, t, t) for t in ts)


def test_transitive_exhaustive_small():
    q = antichain("ab")
    ts = enumerate_terms(q, OMEGA, 4, 2, indices=[0, 1])
    m = {(x, y): leq_h(q, x, y) for x, y in product(ts, repeat=2)}
    for x, y, z in product(ts, repeat=3):
        if m[x, y] and m[y, z]:
            assert m[x, z], (x, y, z)


def test_memo_agrees_with_memo_free():
    rng = random.Random(7)
    q = chain("ab")
    for _ in range(3000):
        t, s = random_term(rng, "ab"), random_term(rng, "ab")
        assert leq_h(q, t, s) == leq_h_nomemo(q, t, s)


@settings(max_examples=300)
@given(terms(), terms())
def test_fuel_strictly_decreases(t, s):
    # leq_h_nomemo asserts the measure shrinks on every recursive call
    leq_h_nomemo(antichain("ab"), t, s)


def test_every_rule_shrinks_the_measure(pool):
    q, ts = pool
    for t, s in product(ts[::7], repeat=2):
        calls = []
        _step(q, t, s, lambda x, y: calls.append((x, y)) or True)
        _step(q, t, s, lambda x, y: calls.append((x, y)) or False)
        assert all(x.size + y.size < t.size + s.size for x, y in calls)


@pytest.mark.parametrize("alpha", ["0", "1", "2", "w", "w^2"])
def test_label_absorption(anti2, alpha):
    for p in ("a", "b"):
        assert equiv_h(anti2, Label(p), SApp(ordinal(alpha), Label(p)))


def test_absorption_law(pool):
    q, ts = pool
    idx = [ordinal(x) for x in ("0", "1", "2", "w")]
    for t in ts:
        if not t.is_tree:
            continue
        for b, g in combinations(idx, 2):
            assert equiv_h(q, SApp(b, SApp(g, t)), SApp(g, t)), t


def test_forest_forest_characterization(pool):
    q, ts = pool
    forests = [t for t in ts if t.is_forest][:120]
    for f, g in product(forests, repeat=2):
        assert leq_h(q, f, g) == all(any(leq_h(q, x, y) for y in g.children) for x in f.children)


@pytest.mark.parametrize("q", list(all_quasiorders("abc")), ids=str)
def test_level0_agrees_with_domination(q):
    subsets = [c for k in (1, 2, 3) for c in combinations("abc", k)]
    for s, r in product(subsets, repeat=2):
        fs, fr = Forest(map(Label, s)), Forest(map(Label, r))
        assert leq_h(q, fs, fr) == dominates(q, s, r)


@settings(max_examples=200)
@given(terms())
def test_canonicalize_preserves_equivalence(t):
    assert equiv_h(antichain("ab"), t, canonicalize(t))


def test_canonicalize_example_is_equivalent(anti2):
    t = parse_term("[a.[b],a]")
    assert equiv_h(anti2, t, canonicalize(t))
