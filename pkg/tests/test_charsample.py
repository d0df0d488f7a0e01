import pytest
from hypothesis import given, settings, strategies as st

from helpers import (
    KINDS, contains_a, contains_a_redundant, one_state, random_ix_target, seeded,
)
from worked import forest_dpa
from omegaid.core import (
    Acceptor, Automaton, Buchi, CoBuchi, Muller, Parity, Rabin, Sample, UPWord, accepts,
)
from omegaid.charsample import (
    char_sample, experiments, t_acc_iba, t_acc_ima, t_acc_ipa, t_acc_ira, t_aut,
)
from omegaid.decide import singleton_normal_form
from omegaid.sccgraph import canonical_forest

W = UPWord.parse


def _sample(pairs):
    return Sample((W(w), bool(label)) for w, label in pairs)


def _ca(cond):
    # contains-a after renaming its states to their access strings
    m = contains_a().renamed({"s0": "", "s1": "a"}.get)
    return Acceptor(m, cond)


def test_t_aut_examples():
    assert t_aut(_ca(Buchi({"a"}))) == _sample([("(b)", 0), ("a(b)", 1), ("aa(b)", 1)])
    top = Acceptor(one_state(), Muller([{"q"}]))
    assert t_aut(top) == _sample([("(a)", 1), ("b(a)", 1)])


def test_t_aut_needs_ix():
    with pytest.raises(ValueError):
        t_aut(Acceptor(contains_a_redundant(), Buchi({"s1", "s2"})))


def test_t_acc_ima_examples():
    assert t_acc_ima(_ca(Muller([{"a"}]))) == _sample([("a(a)", 1)])
    # the trivial languages are not built on two states, so skip the check
    assert len(t_acc_ima(_ca(Muller([])), check=False)) == 0
    assert len(t_acc_ima(_ca(Muller([{"", "a"}])), check=False)) == 0


def test_t_acc_iba_examples():
    assert t_acc_iba(_ca(Buchi({"a"}))) == _sample([("(b)", 0)])
    assert len(t_acc_iba(_ca(Buchi({"", "a"})), check=False)) == 0
    # two b-loops outside the accepting state, told apart by the a-edges
    m = Automaton.from_table(contains_a().alphabet, {
        "p": {"a": "r", "b": "p"}, "q": {"a": "r", "b": "q"}, "r": {"a": "q", "b": "r"},
    }, "p")
    iba = Acceptor(m, Buchi({"r"}))
    assert len(t_acc_iba(iba, check=False)) == 2


def test_t_acc_ipa_examples():
    assert t_acc_ipa(_ca(Parity({"": 0, "a": 1}))) == _sample([("(b)", 0), ("a(a)", 1)])
    one = Acceptor(one_state(), Parity({"q": 1}))
    assert t_acc_ipa(one) == _sample([("(a)", 1)])
    assert len(t_acc_ipa(forest_dpa(), check=False)) == len(canonical_forest(forest_dpa()))
    assert len(canonical_forest(forest_dpa())) == 6


def test_t_acc_ira_examples():
    assert t_acc_ira(_ca(Rabin([({"a"}, ())]))) == _sample([("a(a)", 1)])
    assert len(t_acc_ira(_ca(Rabin([])), check=False)) == 0


def test_char_sample_dual():
    b = char_sample(_ca(Buchi({"a"})))
    c = char_sample(_ca(CoBuchi({"a"})))
    assert c.combined == b.combined.flipped()
    assert b.combined == b.t_aut | _sample([("(b)", 0)])


def _bounds(a, sample):
    n = len(a.automaton.states)
    sigma = len(a.alphabet)
    assert len(sample.t_aut) <= (1 + sigma) * n * n
    for w, _ in sample.combined:
        assert w.length <= n * n + n ** 4 + 2 * n


@pytest.mark.parametrize("kind", KINDS)
def test_consistency_and_size(kind):
    rng = seeded(KINDS.index(kind) + 7)
    for _ in range(25):
        a = random_ix_target(rng, kind)
        cs = char_sample(a)
        for w, label in cs.combined:
            assert accepts(a, w) == label
        _bounds(a, cs)
        assert len(experiments(a)) <= max(len(a.automaton.states) - 1, 1)


def test_rabin_sample_counts():
    rng = seeded(77)
    for _ in range(50):
        a = random_ix_target(rng, "rabin")
        m = len(singleton_normal_form(a).condition.pairs)
        n = len(a.automaton.states)
        acc = t_acc_ira(a)
        assert len(acc.positives) <= m
        assert len(acc.negatives) <= m * n


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_experiments_separate_all_states(seed):
    a = random_ix_target(seeded(seed), "muller", max_states=4)
    es = experiments(a)
    states = a.automaton.states
    for i, p in enumerate(states):
        for q in states[i + 1:]:
            ap, aq = a.with_initial(p), a.with_initial(q)
            assert any(accepts(ap, e) != accepts(aq, e) for e in es)
