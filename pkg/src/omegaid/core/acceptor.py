"""Acceptors and their semantics on ultimately periodic words."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..graphs import nontrivial_components, reachable
from .automaton import Automaton
from .conditions import Buchi, CoBuchi, Muller, Parity, Rabin, Streett
from .words import UPWord

DEAD = "dead"


@dataclass(frozen=True)
class Acceptor:
    """An automaton paired with an acceptance condition."""

    automaton: Automaton
    condition: object

    def __post_init__(self):
        states = set(self.automaton.states)
        stray = self.condition.mentioned() - states
        if stray:
            raise ValueError(f"condition mentions unknown state {next(iter(stray))!r}")
        if isinstance(self.condition, Parity) and set(self.condition.colors) != states:
            raise ValueError("parity coloring must cover every state")

    @property
    def kind(self) -> str:
        return self.condition.kind

    @property
    def alphabet(self):
        return self.automaton.alphabet

    @property
    def type_name(self) -> str:
        det = "D" if self.automaton.is_deterministic else "N"
        return f"{det}{self.condition.letter}A"

    def with_initial(self, q) -> "Acceptor":
        return Acceptor(self.automaton.with_initial(q), self.condition)

    def with_condition(self, condition) -> "Acceptor":
        return Acceptor(self.automaton, condition)

    @cached_property
    def completed(self) -> "Acceptor":
        return complete(self)

    def __contains__(self, word: UPWord) -> bool:
        return accepts(self, word)


def size(a: Acceptor) -> int:
    """Alphabet size times state count, plus one less than the number of
    pairs or sets for pair and family conditions."""
    base = len(a.alphabet) * len(a.automaton.states)
    if isinstance(a.condition, (Rabin, Streett, Muller)):
        return base + max(a.condition.index - 1, 0)
    return base


def _fresh_dead(states) -> str:
    name = DEAD
    taken = set(states)
    while name in taken:
        name += "'"
    return name


def complete(a: Acceptor) -> Acceptor:
    """Add a rejecting sink for missing transitions; the language is unchanged."""
    m = a.automaton
    if m.is_complete:
        return a
    dead = _fresh_dead(m.states)
    trans = dict(m.transitions)
    for q in m.states:
        for s in m.alphabet:
            trans.setdefault((q, s), frozenset([dead]))
    for s in m.alphabet:
        trans[(dead, s)] = frozenset([dead])
    auto = Automaton(m.alphabet, m.states + (dead,), m.initial, trans)
    c = a.condition
    if isinstance(c, CoBuchi):
        c = CoBuchi(c.rejecting | {dead})
    elif isinstance(c, Parity):
        c = Parity({**c.colors, dead: 0})
    elif isinstance(c, Streett):
        # with no pairs every run accepts, so one pair is needed to reject the sink
        pairs = [(g | {dead}, b) for g, b in c.pairs] or [({dead}, ())]
        c = Streett(pairs)
    return Acceptor(auto, c)


def _deterministic_complete(m):
    if isinstance(m, Acceptor):
        m = m.completed.automaton
    if not m.is_deterministic:
        raise ValueError("automaton is not deterministic")
    if not m.is_complete:
        raise ValueError("automaton is not complete")
    return m


def run_inf(m, w: UPWord, start=None) -> frozenset:
    """States visited infinitely often by the run on ``w``.

    ``m`` is a deterministic complete automaton, or an acceptor (completed
    on the fly).
    """
    m = _deterministic_complete(m)
    q = m.run(w.prefix, start)
    first_seen = {}
    heads = []
    while q not in first_seen:
        first_seen[q] = len(heads)
        heads.append(q)
        q = m.run(w.period, q)
    inf = set()
    for head in heads[first_seen[q]:]:
        p = head
        for s in w.period:
            p = m.step(p, s)
            inf.add(p)
    return frozenset(inf)


def accepts(a: Acceptor, w: UPWord) -> bool:
    return a.condition.holds(run_inf(a, w))


def convert(a: Acceptor, target: str) -> Acceptor:
    """Language-preserving change of condition.

    Supported: buchi to parity, buchi to rabin, cobuchi to streett.
    """
    c = a.condition
    if isinstance(c, Buchi) and target == "parity":
        return a.with_condition(
            Parity({q: 1 if q in c.accepting else 2 for q in a.automaton.states}))
    if isinstance(c, Buchi) and target == "rabin":
        return a.with_condition(Rabin([(c.accepting, ())]))
    if isinstance(c, CoBuchi) and target == "streett":
        return a.with_condition(Streett([(c.rejecting, ())]))
    if c.kind == target:
        return a
    raise ValueError(f"no conversion from {c.kind} to {target}")


def complement(a: Acceptor) -> Acceptor:
    """Same components under the dual condition; accepts exactly the other words.

    Defined for deterministic Büchi/coBüchi and Rabin/Streett acceptors.
    """
    a = a.completed
    if not a.automaton.is_deterministic:
        raise ValueError("complement needs a deterministic acceptor")
    c = a.condition
    if isinstance(c, Buchi):
        return a.with_condition(CoBuchi(c.accepting))
    if isinstance(c, CoBuchi):
        return a.with_condition(Buchi(c.rejecting))
    if isinstance(c, Rabin):
        return a.with_condition(Streett(c.pairs))
    if isinstance(c, Streett):
        return a.with_condition(Rabin(c.pairs))
    raise ValueError(f"no complement for {c.kind} acceptors")


def isomorphic(m1: Automaton, m2: Automaton):
    """The bijection between two deterministic complete automata that
    respects transitions and initial states, or ``None``.

    The candidate is built by a simultaneous walk from the initial states,
    so states unreachable in either automaton can never be matched.
    """
    for m in (m1, m2):
        if not m.is_deterministic:
            raise ValueError("automaton is not deterministic")
    if m1.alphabet != m2.alphabet or len(m1.states) != len(m2.states):
        return None
    if not (m1.is_complete and m2.is_complete):
        raise ValueError("automaton is not complete")
    f = {m1.initial: m2.initial}
    back = {m2.initial: m1.initial}
    queue = [m1.initial]
    for q in queue:
        for s in m1.alphabet:
            t1, t2 = m1.step(q, s), m2.step(f[q], s)
            if t1 in f:
                if f[t1] != t2:
                    return None
            elif t2 in back:
                return None
            else:
                f[t1], back[t2] = t2, t1
                queue.append(t1)
    return f if len(f) == len(m1.states) else None


def _lasso_graph(m: Automaton, w: UPWord):
    """Product of ``m`` with the positions of the lasso ``w``."""
    text = w.prefix + w.period
    loop = len(w.prefix)
    nxt = [i + 1 if i + 1 < len(text) else loop for i in range(len(text))]

    def succ(node):
        q, i = node
        return [(t, nxt[i]) for t in m.successors(q, text[i])]

    nodes = reachable([(m.initial, 0)], succ)
    return nodes, succ


def _cycle_exists(nodes, succ, keep, good):
    inside = [n for n in nodes if keep(n[0])]
    return any(any(good(n[0]) for n in comp)
               for comp in nontrivial_components(inside, succ))


def _streett_cycle(nodes, succ, pairs) -> bool:
    for comp in nontrivial_components(nodes, succ):
        seen = {q for q, _ in comp}
        bad = [g for g, b in pairs if not g.isdisjoint(seen) and b.isdisjoint(seen)]
        if not bad:
            return True
        drop = set().union(*bad)
        if _streett_cycle([n for n in comp if n[0] not in drop], succ, pairs):
            return True
    return False


def lasso_accepts(a: Acceptor, w: UPWord) -> bool:
    """Acceptance for possibly nondeterministic, possibly incomplete acceptors.

    Searches the product of the automaton with the lasso shape of ``w`` for
    a reachable cycle whose projection satisfies the condition.
    """
    nodes, succ = _lasso_graph(a.automaton, w)
    c = a.condition
    every = lambda q: True  # noqa: E731
    if isinstance(c, Buchi):
        return _cycle_exists(nodes, succ, every, c.accepting.__contains__)
    if isinstance(c, CoBuchi):
        return _cycle_exists(nodes, succ, lambda q: q not in c.rejecting, every)
    if isinstance(c, Parity):
        for k in sorted({v for v in c.colors.values() if v % 2}):
            if _cycle_exists(nodes, succ, lambda q: c.color(q) >= k,
                             lambda q: c.color(q) == k):
                return True
        return False
    if isinstance(c, Rabin):
        return any(_cycle_exists(nodes, succ, lambda q: q not in b, g.__contains__)
                   for g, b in c.pairs)
    if isinstance(c, Streett):
        return _streett_cycle(nodes, succ, c.pairs)
    for target in c.family:
        inside = [n for n in nodes if n[0] in target]
        for comp in nontrivial_components(inside, succ):
            if {q for q, _ in comp} == target:
                return True
    return False


def nba_accepts(a: Acceptor, w: UPWord) -> bool:
    """Acceptance for nondeterministic, possibly incomplete Büchi acceptors."""
    if not isinstance(a.condition, Buchi):
        raise ValueError("nba_accepts needs a Büchi condition")
    return lasso_accepts(a, w)
