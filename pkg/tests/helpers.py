"""Shared fixtures: small named automata and random generators."""

import random

from omegaid.core import (
    Acceptor, Alphabet, Automaton, Buchi, CoBuchi, Muller, Parity, Rabin, Streett, UPWord,
)

AB = Alphabet.of("ab")
KINDS = ("buchi", "cobuchi", "parity", "rabin", "streett", "muller")
CLASS_OF = {"buchi": "ib", "cobuchi": "ic", "parity": "ip",
            "rabin": "ir", "streett": "is", "muller": "im"}


def contains_a():
    """s0 --a--> s1, s1 is a sink, b loops on s0."""
    return Automaton.from_table(AB, {"s0": {"a": "s1", "b": "s0"},
                                     "s1": {"a": "s1", "b": "s1"}}, "s0")


def last_symbol():
    """The state records the last symbol read: s1 after a, s0 after b."""
    return Automaton.from_table(AB, {"s0": {"a": "s1", "b": "s0"},
                                     "s1": {"a": "s1", "b": "s0"}}, "s0")


def contains_a_redundant():
    """contains_a with the sink split into two equivalent states."""
    return Automaton.from_table(AB, {"s0": {"a": "s1", "b": "s0"},
                                     "s1": {"a": "s2", "b": "s1"},
                                     "s2": {"a": "s1", "b": "s2"}}, "s0")


def one_state():
    return Automaton.from_table(AB, {"q": {"a": "q", "b": "q"}}, "q")


def random_automaton(rng, n, alphabet=AB):
    states = [f"q{i}" for i in range(n)]
    table = {q: {s: rng.choice(states) for s in alphabet} for q in states}
    return Automaton.from_table(alphabet, table, states[0])


def _subset(rng, states, p=0.5):
    return {q for q in states if rng.random() < p}


def random_condition(rng, kind, states, max_pairs=3):
    if kind == "buchi":
        return Buchi(_subset(rng, states))
    if kind == "cobuchi":
        return CoBuchi(_subset(rng, states))
    if kind == "parity":
        return Parity({q: rng.randint(0, 3) for q in states})
    if kind in ("rabin", "streett"):
        pairs = [(_subset(rng, states, 0.4), _subset(rng, states, 0.3))
                 for _ in range(rng.randint(0, max_pairs))]
        return Rabin(pairs) if kind == "rabin" else Streett(pairs)
    family = [_subset(rng, states, 0.5) or {rng.choice(states)}
              for _ in range(rng.randint(0, 3))]
    return Muller(family)


def random_acceptor(rng, kind, n, alphabet=AB, max_pairs=3):
    m = random_automaton(rng, n, alphabet)
    return Acceptor(m, random_condition(rng, kind, m.states, max_pairs))


def random_word(rng, alphabet=AB, max_prefix=4, max_period=4):
    symbols = list(alphabet)
    u = "".join(rng.choice(symbols) for _ in range(rng.randint(0, max_prefix)))
    v = "".join(rng.choice(symbols) for _ in range(rng.randint(1, max_period)))
    return UPWord(u, v)


def all_words(alphabet=AB, max_prefix=3, max_period=3):
    """Every canonical word with short prefix and period."""
    out = {}
    for u in alphabet.words_up_to(max_prefix):
        for v in alphabet.words_up_to(max_period):
            if v:
                out[UPWord(u, v)] = None
    return list(out)


def random_ix_target(rng, kind, max_states=5, max_pairs=3):
    """A random acceptor whose automaton is its right-congruence automaton."""
    from omegaid.congruence import is_ix
    n = rng.randint(1, max_states)
    while True:
        a = random_acceptor(rng, kind, n, max_pairs=max_pairs)
        if is_ix(a):
            return a


def seeded(seed):
    return random.Random(seed)
