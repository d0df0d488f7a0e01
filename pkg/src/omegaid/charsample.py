"""Characteristic samples: labeled words from which the learners recover a
target acceptor built on its right-congruence automaton."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .congruence import is_ix
from .core import Acceptor, Rabin, Sample, UPWord, accepts, complement, run_inf
from .decide import included, singleton_normal_form, states_distinguishable
from .sccgraph import canonical_forest, is_scc, max_sccs, witness

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharSample:
    t_aut: Sample
    t_acc: Sample

    @property
    def combined(self) -> Sample:
        return self.t_aut | self.t_acc


def _ix(a: Acceptor, check: bool) -> Acceptor:
    a = a.completed
    if check and not is_ix(a):
        raise ValueError("characteristic samples need an acceptor whose automaton "
                         "is the right-congruence automaton of its language")
    return a


def experiments(a: Acceptor) -> list:
    """Words that together tell apart every pair of states.

    A new word is computed only for pairs that no earlier word separates, so
    each one splits some class and there are fewer words than states.
    """
    m = a.automaton
    if len(m.states) == 1:
        return [UPWord("", m.alphabet.symbols[0])]
    found = []
    states = m.states
    for i, p in enumerate(states):
        for q in states[i + 1:]:
            ap, aq = a.with_initial(p), a.with_initial(q)
            if any(accepts(ap, e) != accepts(aq, e) for e in found):
                continue
            w = states_distinguishable(a, p, q)
            if w is not None:
                found.append(w)
    return found


def t_aut(a: Acceptor, check: bool = True) -> Sample:
    """Access strings, and their one-symbol extensions, followed by every experiment."""
    a = _ix(a, check)
    m = a.automaton
    key = m.alphabet.key
    access = sorted(m.access_strings.values(), key=key)
    prefixes = access + [s + c for s in access for c in m.alphabet]
    sample = Sample()
    for e in experiments(a):
        for x in prefixes:
            w = e.prepend(x)
            sample.add(w, accepts(a, w))
    return sample


def t_acc_ima(a: Acceptor, check: bool = True) -> Sample:
    """One positive word per accepting set that some run can realise."""
    a = _ix(a, check)
    m = a.automaton
    sample = Sample()
    for f in a.condition.family:
        if is_scc(m, f):
            sample.add(witness(f, m), True)
        else:
            log.info("dropping %s: not a reachable SCC", sorted(map(str, f)))
    return sample


def t_acc_iba(a: Acceptor, check: bool = True) -> Sample:
    """One negative word per maximal SCC avoiding the accepting states."""
    a = _ix(a, check)
    m = a.automaton
    rest = [q for q in m.states if q not in a.condition.accepting]
    return Sample((witness(c, m), False) for c in max_sccs(m, rest))


def t_acc_ipa(a: Acceptor, check: bool = True) -> Sample:
    """One word per node of the canonical forest, labeled by acceptance."""
    a = _ix(a, check)
    m = a.automaton
    sample = Sample()
    for node in canonical_forest(a).nodes:
        w = witness(node, m)
        sample.add(w, accepts(a, w))
    return sample


def t_acc_ira(a: Acceptor, check: bool = True) -> Sample:
    """Climb a ladder of Rabin conditions that under-approximate the target.

    Each round takes the ⪯-largest missing positive word, adds it, and admits
    every pair it satisfies that is safe for the target; unsafe pairs yield
    a negative word.
    """
    r = singleton_normal_form(_ix(a, check))
    m = r.automaton
    everything = frozenset(m.states)
    gamma = []
    sample = Sample()
    for _ in range(len(r.condition.pairs) + 1):
        v = included(r, Acceptor(m, Rabin(gamma)))
        if v:
            return sample
        c = run_inf(m, v.witness)
        sample.add(witness(c, m), True)
        avoid = everything - c
        for q in sorted(c, key=m.position):
            single = Acceptor(m, Rabin([({q}, avoid)]))
            verdict = included(single, r)
            if verdict:
                gamma.append(({q}, avoid))
            else:
                sample.add(witness(run_inf(m, verdict.witness), m), False)
    raise RuntimeError("Rabin ladder did not converge")


def char_sample(a: Acceptor, check: bool = True) -> CharSample:
    a = _ix(a, check)
    kind = a.kind
    if kind in ("cobuchi", "streett"):
        dual = char_sample(complement(a), check=False)
        return CharSample(dual.t_aut.flipped(), dual.t_acc.flipped())
    acc = {"buchi": t_acc_iba, "parity": t_acc_ipa, "rabin": t_acc_ira,
           "muller": t_acc_ima}[kind]
    return CharSample(t_aut(a, check=False), acc(a, check=False))

