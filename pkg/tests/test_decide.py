import pytest
from hypothesis import given, settings, strategies as st

from helpers import (
    AB, KINDS, all_words, contains_a, contains_a_redundant, last_symbol, one_state,
    random_acceptor, random_automaton, seeded,
)
from worked import LOOP_DBA_EDGES, LOOP_SET, loop_automaton
from omegaid.core import (
    Acceptor, Alphabet, Automaton, Buchi, CoBuchi, Muller, Parity, Rabin, Streett, UPWord, accepts,
    run_inf,
)
from omegaid.decide import (
    access_table, colors_search, dba_in_dma, dma_included, equivalent, included, preceq_cmp,
    scc_to_dba, singleton_normal_form, states_distinguishable, sub_inc_dra,
)
from omegaid.oracle import brute_inclusion, enumerate_sccs, largest_counterexample
from omegaid.sccgraph import canonical_coloring, product

W = UPWord.parse


def _sound(v, a1, a2):
    assert accepts(a1, v.witness) and not accepts(a2, v.witness)


def test_access_table_examples():
    assert access_table(one_state())["q"] == ""
    t = access_table(contains_a())
    assert (t["s0"], t["s1"]) == ("", "a")
    chain = Automaton.from_table(AB, {"p": {"a": "q", "b": "p"}, "q": {"a": "r", "b": "q"},
                                      "r": {"a": "r", "b": "r"}}, "p")
    assert access_table(chain)["r"] == "aa"
    with pytest.raises(ValueError):
        access_table(Automaton.from_table(AB, {"p": {"a": "p", "b": "p"},
                                               "q": {"a": "p", "b": "p"}}, "p"))


def test_preceq_worked_example():
    # states named by their access strings
    names = ["", "a", "b", "aa", "ab", "ba", "bb", "baa"]
    table = {}
    for x in names:
        table[x] = {s: (x + s if x + s in names else x) for s in "ab"}
    m = Automaton.from_table(AB, table, "")
    tbl = access_table(m)
    s1, s2, s3 = {"", "a", "baa"}, {"a", "ba"}, {"", "ab", "ba"}
    assert preceq_cmp(s2, s1, tbl) < 0
    assert preceq_cmp(s1, s3, tbl) < 0
    assert preceq_cmp(s1, s1, tbl) == 0
    assert preceq_cmp({"a"}, s3, tbl) < 0


def test_singleton_normal_form_examples():
    m = Automaton.from_table(AB, {q: {"a": "q1", "b": "q2"} for q in ("q1", "q2", "q3")}, "q1",
                             states=("q1", "q2", "q3"))
    r = singleton_normal_form(Acceptor(m, Rabin([({"q1", "q2"}, {"q3"})])))
    assert set(r.condition.pairs) == {(frozenset({"q1"}), frozenset({"q3"})),
                                      (frozenset({"q2"}), frozenset({"q3"}))}
    again = singleton_normal_form(r)
    assert again.condition == r.condition
    assert singleton_normal_form(Acceptor(m, Rabin([(set(), {"q3"})]))).condition.pairs == ()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_singleton_normal_form_preserves_language(seed, n):
    r = random_acceptor(seeded(seed), "rabin", n)
    s = singleton_normal_form(r)
    assert len(s.condition.pairs) <= n * len(r.condition.pairs)
    assert all(len(g) == 1 for g, _ in s.condition.pairs)
    assert brute_inclusion(r, s) and brute_inclusion(s, r)


def _swap_pair():
    m = contains_a()
    return Acceptor(m, Parity({"s0": 2, "s1": 1})), Acceptor(m, Parity({"s0": 1, "s1": 2}))


def test_colors_search_examples():
    p1, p2 = _swap_pair()
    w = colors_search(p1, p2, 1, 2)
    assert run_inf(product(p1.automaton, p2.automaton), w) == {("s1", "s1")}
    assert colors_search(p1, p2, 2, 2) is None
    assert colors_search(p1, p1, 3, 3) is None


def test_included_examples():
    a = Acceptor(contains_a(), Buchi({"s1"}))
    assert included(a, a)
    assert included(a, Acceptor(one_state(), Buchi({"q"})))
    inf_a = Acceptor(last_symbol(), Parity({"s1": 1, "s0": 2}))
    inf_b = Acceptor(last_symbol(), Parity({"s0": 1, "s1": 2}))
    v = included(inf_a, inf_b)
    assert not v
    _sound(v, inf_a, inf_b)


def test_included_errors():
    a = Acceptor(contains_a(), Buchi({"s1"}))
    with pytest.raises(ValueError):
        included(a, Acceptor(contains_a(), Muller([])))
    other = Automaton.from_table(Alphabet.of("abc"), {"q": dict.fromkeys("abc", "q")}, "q")
    with pytest.raises(ValueError):
        included(a, Acceptor(other, Buchi({"q"})))


def test_mixed_types_use_conversions():
    b = Acceptor(contains_a(), Buchi({"s1"}))
    p = Acceptor(contains_a(), Parity({"s0": 2, "s1": 1}))
    r = Acceptor(contains_a(), Rabin([({"s1"}, ())]))
    assert equivalent(b, p) and equivalent(r, b)
    c = Acceptor(contains_a(), CoBuchi({"s0"}))
    s = Acceptor(contains_a(), Streett([({"s0"}, ())]))
    assert equivalent(c, s)


def test_sub_inc_dra_examples():
    m = contains_a()
    r1 = Acceptor(m, Rabin([({"s1"}, ())]))
    r2 = Acceptor(m, Rabin([({"s1"}, {"s0"})]))
    everything = product(m, m).states
    assert sub_inc_dra(r1, r2, everything) is None
    w = sub_inc_dra(r1, Acceptor(m, Rabin([({"s0"}, ())])), everything)
    assert run_inf(product(m, m), w) == {("s1", "s1")}
    assert sub_inc_dra(r1, r2, set()) is None


def test_scc_to_dba_matches_worked_example():
    b = scc_to_dba(loop_automaton(), LOOP_SET, "q0")
    assert len(b.automaton.states) == len(LOOP_SET) ** 2 + 1
    assert b.condition == Buchi({"q0"})
    edges = {(q, a): b.automaton.step(q, a) for q in b.automaton.reachable_states
             for a in "ab"}
    assert edges == LOOP_DBA_EDGES


def test_scc_to_dba_single_state():
    b = scc_to_dba(contains_a(), {"s1"}, "s1")
    assert len(b.automaton.states) == 2
    assert accepts(b, W("(ab)")) and accepts(b, W("(b)"))


def test_scc_to_dba_errors():
    with pytest.raises(ValueError):
        scc_to_dba(loop_automaton(), LOOP_SET, "q3")
    with pytest.raises(ValueError):
        scc_to_dba(contains_a(), {"s0", "s1"}, "s0")


def _stays_and_covers(m, f, q, w):
    """Read ``w`` from ``q``: every visited state lies in ``f`` and the
    infinitely visited set is ``f``."""
    here = q
    for a in w.prefix + w.period * (len(m.states) + 1):
        here = m.step(here, a)
        if here not in f:
            return False
    return run_inf(m, w, start=q) == f


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_scc_to_dba_language(seed, n):
    m = random_automaton(seeded(seed), n)
    words = all_words(max_prefix=4, max_period=4)
    for f in enumerate_sccs(m)[:3]:
        q = min(f, key=m.position)
        b = scc_to_dba(m, f, q)
        assert len(b.automaton.states) == len(f) ** 2 + 1
        for w in words:
            assert accepts(b, w) == _stays_and_covers(m, f, q, w)


def test_dba_in_dma_examples():
    m = contains_a()
    b = Acceptor(m, Buchi({"s1"}))
    assert dba_in_dma(b, Acceptor(m, Muller([{"s1"}])))
    v = dba_in_dma(b, Acceptor(m, Muller([{"s0"}])))
    _sound(v, b, Acceptor(m, Muller([{"s0"}])))
    assert dba_in_dma(Acceptor(m, Buchi(set())), Acceptor(m, Muller([])))


def test_dma_included_examples():
    m = contains_a()
    u1, u2 = Acceptor(m, Muller([{"s1"}])), Acceptor(m, Muller([{"s0"}, {"s1"}]))
    assert dma_included(u1, u2)
    v = dma_included(u2, u1)
    assert v.witness == W("(b)")
    assert dma_included(Acceptor(m, Muller([])), u1)


def test_equivalent_examples():
    a = Acceptor(contains_a(), Buchi({"s1"}))
    assert equivalent(a, a)
    partial = Automaton.from_table(AB, {"s0": {"a": "s1"}, "s1": {"a": "s1", "b": "s1"}}, "s0")
    p = Acceptor(partial, Buchi({"s1"}))
    assert not equivalent(a, p)
    q = Acceptor(contains_a_redundant(), Buchi({"s1", "s2"}))
    assert equivalent(a, q)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 5))
def test_canonical_recoloring_is_equivalent(seed, n):
    p = random_acceptor(seeded(seed), "parity", n)
    assert equivalent(p, Acceptor(p.automaton, Parity(canonical_coloring(p))))


def test_states_distinguishable_examples():
    a = Acceptor(contains_a(), Buchi({"s1"}))
    assert states_distinguishable(a, "s0", "s0") is None
    assert states_distinguishable(a, "s0", "s1") == W("(b)")
    inf_a = Acceptor(last_symbol(), Buchi({"s1"}))
    assert states_distinguishable(inf_a, "s0", "s1") is None
    with pytest.raises(ValueError):
        states_distinguishable(a, "s0", "zz")


@pytest.mark.parametrize("kind", KINDS)
def test_agrees_with_oracle(kind):
    rng = seeded(KINDS.index(kind))
    for _ in range(40):
        a1 = random_acceptor(rng, kind, rng.randint(1, 4))
        a2 = random_acceptor(rng, kind, rng.randint(1, 4))
        v = included(a1, a2)
        assert bool(v) == bool(brute_inclusion(a1, a2))
        if not v:
            _sound(v, a1, a2)


def test_rabin_witness_is_largest():
    rng = seeded(99)
    checked = 0
    while checked < 30:
        r1 = random_acceptor(rng, "rabin", rng.randint(1, 4))
        r2 = random_acceptor(rng, "rabin", rng.randint(1, 4))
        v = included(r1, r2)
        if v:
            continue
        checked += 1
        m = product(r1.automaton, r2.automaton)
        assert run_inf(m, v.witness) == largest_counterexample(r1, r2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(KINDS))
def test_inclusion_is_a_preorder(seed, kind):
    rng = seeded(seed)
    a, b, c = (random_acceptor(rng, kind, rng.randint(1, 3)) for _ in range(3))
    assert included(a, a)
    if included(a, b) and included(b, c):
        assert included(a, c)
