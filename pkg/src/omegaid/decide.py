"""Inclusion and equivalence of deterministic acceptors of all six types."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Acceptor, Automaton, Buchi, Muller, Rabin, UPWord,
    complement, convert,
)
from .sccgraph import is_scc, max_sccs, pi1, pi2, product, witness


@dataclass(frozen=True)
class InclusionVerdict:
    """Truthy when inclusion holds; otherwise carries a counterexample word
    accepted on the left and rejected on the right."""

    witness: UPWord | None = None

    @property
    def holds(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.witness is None


INCLUDED = InclusionVerdict()


class AccessTable:
    """Shortlex-least access string of every state of an automaton."""

    def __init__(self, m: Automaton):
        acc = m.access_strings
        missing = [q for q in m.states if q not in acc]
        if missing:
            raise ValueError(f"state {missing[0]!r} is unreachable")
        self.automaton = m
        self._acc = acc
        self._key = m.alphabet.key

    def __getitem__(self, q) -> str:
        return self._acc[q]

    def of_set(self, s) -> list:
        """Access strings of ``s`` in increasing shortlex order."""
        return sorted((self._acc[q] for q in s), key=self._key)

    def set_key(self, s) -> tuple:
        """Sort key realising the ⪯ order: size first, then access strings."""
        return (len(s), tuple(sorted(self._key(self._acc[q]) for q in s)))


def access_table(m: Automaton) -> AccessTable:
    return AccessTable(m)


def preceq_cmp(s1, s2, tbl: AccessTable) -> int:
    k1, k2 = tbl.set_key(s1), tbl.set_key(s2)
    return (k1 > k2) - (k1 < k2)


def _prepare(a: Acceptor) -> Acceptor:
    a = a.completed
    if not a.automaton.is_deterministic:
        raise ValueError("inclusion needs deterministic acceptors")
    return a


def singleton_normal_form(r: Acceptor) -> Acceptor:
    """Split every Rabin pair into one pair per state of its first set."""
    if not isinstance(r.condition, Rabin):
        raise ValueError("a Rabin acceptor is required")
    pairs = [(frozenset([q]), b) for g, b in r.condition.pairs
             for q in sorted(g, key=r.automaton.position)]
    return r.with_condition(Rabin(pairs))


# parity

def _colors_search(m, k1c, k2c, k1, k2):
    keep = [p for p in m.states if k1c[p[0]] >= k1 and k2c[p[1]] >= k2]
    for c in max_sccs(m, keep):
        if min(k1c[p[0]] for p in c) == k1 and min(k2c[p[1]] for p in c) == k2:
            return witness(c, m)
    return None


def colors_search(p1: Acceptor, p2: Acceptor, k1: int, k2: int):
    """A word on which the least infinitely seen colors are exactly ``k1``
    and ``k2``, or ``None``."""
    p1, p2 = _prepare(p1), _prepare(p2)
    m = product(p1.automaton, p2.automaton, reachable_only=True)
    return _colors_search(m, p1.condition.colors, p2.condition.colors, k1, k2)


def _dpa_included(p1: Acceptor, p2: Acceptor) -> InclusionVerdict:
    m = product(p1.automaton, p2.automaton, reachable_only=True)
    c1, c2 = p1.condition.colors, p2.condition.colors
    for k1 in sorted({v for v in c1.values() if v % 2}):
        for k2 in sorted({v for v in c2.values() if v % 2 == 0}):
            w = _colors_search(m, c1, c2, k1, k2)
            if w is not None:
                return InclusionVerdict(w)
    return INCLUDED


# rabin

def _sub_inc(m, pair, pairs2, s, key):
    """Largest (under ``key``) reachable SCC inside ``s`` that satisfies
    ``pair`` on the left and no pair of ``pairs2`` on the right."""
    (g1,), b1 = tuple(pair[0]), pair[1]
    best = None
    for c in max_sccs(m, [p for p in s if p[0] not in b1]):
        if g1 not in pi1(c):
            continue
        right = pi2(c)
        # right-hand pairs whose second set is avoided; hitting their state accepts
        blocked = set().union(*(g for g, b in pairs2 if b.isdisjoint(right)))
        if blocked.isdisjoint(right):
            found = c
        else:
            found = _sub_inc(m, pair, pairs2, [p for p in c if p[1] not in blocked], key)
        if found is not None and (best is None or key(found) > key(best)):
            best = found
    return best


def _dra_search(r1: Acceptor, r2: Acceptor):
    r1, r2 = singleton_normal_form(r1), singleton_normal_form(r2)
    m = product(r1.automaton, r2.automaton, reachable_only=True)
    key = AccessTable(m).set_key
    best = None
    for pair in r1.condition.pairs:
        found = _sub_inc(m, pair, r2.condition.pairs, m.states, key)
        if found is not None and (best is None or key(found) > key(best)):
            best = found
    return m, best


def sub_inc_dra(r1: Acceptor, r2: Acceptor, s):
    """Search the product states ``s`` for a word accepted by the single-pair
    acceptor ``r1`` and rejected by ``r2``; the word with the ⪯-largest
    infinity set is returned, or ``None``."""
    r1, r2 = _prepare(r1), _prepare(r2)
    if len(r1.condition.pairs) != 1:
        raise ValueError("the left acceptor must have exactly one pair")
    (g, _), = r1.condition.pairs
    if len(g) != 1 or any(len(g2) != 1 for g2, _ in r2.condition.pairs):
        raise ValueError("acceptors must be in singleton normal form")
    m = product(r1.automaton, r2.automaton, reachable_only=True)
    found = _sub_inc(m, r1.condition.pairs[0], r2.condition.pairs,
                     [p for p in m.states if p in set(s)], AccessTable(m).set_key)
    return None if found is None else witness(found, m)


def _dra_included(r1: Acceptor, r2: Acceptor) -> InclusionVerdict:
    m, best = _dra_search(r1, r2)
    return INCLUDED if best is None else InclusionVerdict(witness(best, m))


# muller

def scc_to_dba(m: Automaton, f, q) -> Acceptor:
    """A DBA for the words that, read from ``q``, stay inside ``f`` forever
    and visit every state of ``f`` infinitely often.

    States are ``q0 .. q{n-1}`` (the states of ``f``, ``q`` first), ``ri,j``
    for i != j, and the sink ``d0``; the accepting set is ``{q0}``.
    """
    f = frozenset(f)
    if q not in f:
        raise ValueError("start state is not in the set")
    if not is_scc(m, f):
        raise ValueError("set is not an SCC")
    order = [q] + [p for p in m.states if p in f and p != q]
    idx = {p: i for i, p in enumerate(order)}
    n = len(order)
    qs = [f"q{i}" for i in range(n)]
    r = {(i, j): f"r{i},{j}" for i in range(n) for j in range(n) if i != j}
    dead = "d0"
    trans = {}
    for a in m.alphabet:
        trans[(dead, a)] = {dead}
        for i, p in enumerate(order):
            t = m.step(p, a)
            if t not in f:
                trans[(qs[i], a)] = {dead}
                for j in range(n):
                    if j != i:
                        trans[(r[i, j], a)] = {dead}
                continue
            k = idx[t]
            nxt = (i + 1) % n
            trans[(qs[i], a)] = {qs[k] if k == nxt else r[k, nxt]}
            for j in range(n):
                if j != i:
                    trans[(r[i, j], a)] = {qs[k] if k == j else r[k, j]}
    states = tuple(qs) + tuple(r.values()) + (dead,)
    return Acceptor(Automaton(m.alphabet, states, qs[0], trans), Buchi({qs[0]}))


def dba_in_dma(b: Acceptor, u: Acceptor) -> InclusionVerdict:
    """Inclusion of a DBA in a DMA."""
    b, u = _prepare(b), _prepare(u)
    if not isinstance(b.condition, Buchi) or not isinstance(u.condition, Muller):
        raise ValueError("expected a Büchi and a Muller acceptor")
    m = product(b.automaton, u.automaton, reachable_only=True)
    acc = b.condition.accepting
    family = u.condition.family
    members = set(family)
    for c in max_sccs(m, m.states):
        if acc.isdisjoint(pi1(c)):
            continue
        right = pi2(c)
        if right not in members:
            return InclusionVerdict(witness(c, m))
        left = pi1(c)
        for f in family:
            if not f <= right:
                continue
            for q in sorted(f, key=u.automaton.position):
                rest = f - {q}
                s = [p for p in m.states if p[0] in left and p[1] in rest]
                for d in max_sccs(m, s):
                    if not acc.isdisjoint(pi1(d)) and pi2(d) not in members:
                        return InclusionVerdict(witness(d, m))
    return INCLUDED


def dma_included(u1: Acceptor, u2: Acceptor) -> InclusionVerdict:
    u1, u2 = _prepare(u1), _prepare(u2)
    m1 = u1.automaton
    m = product(m1, u2.automaton, reachable_only=True)
    acc = m.access_strings
    reach = set(m1.access_strings)
    for f in u1.condition.family:
        if not f <= reach or not is_scc(m1, f):
            continue
        for q1, q2 in m.states:
            if q1 not in f:
                continue
            v = dba_in_dma(scc_to_dba(m1, f, q1), u2.with_initial(q2))
            if not v:
                return InclusionVerdict(v.witness.prepend(acc[(q1, q2)]))
    return INCLUDED


# dispatch

_CONVERTIBLE = {
    frozenset({"buchi", "parity"}): "parity",
    frozenset({"buchi", "rabin"}): "rabin",
    frozenset({"cobuchi", "streett"}): "streett",
}


def included(a1: Acceptor, a2: Acceptor) -> InclusionVerdict:
    """Decide whether every word accepted by ``a1`` is accepted by ``a2``."""
    a1, a2 = _prepare(a1), _prepare(a2)
    if a1.alphabet != a2.alphabet:
        raise ValueError("alphabets differ")
    if a1.kind != a2.kind:
        target = _CONVERTIBLE.get(frozenset({a1.kind, a2.kind}))
        if target is None:
            raise ValueError(f"cannot compare {a1.kind} with {a2.kind}")
        a1, a2 = convert(a1, target), convert(a2, target)
    kind = a1.kind
    if kind == "parity":
        return _dpa_included(a1, a2)
    if kind == "buchi":
        return _dpa_included(convert(a1, "parity"), convert(a2, "parity"))
    if kind == "cobuchi":
        return included(complement(a2), complement(a1))
    if kind == "rabin":
        return _dra_included(a1, a2)
    if kind == "streett":
        return _dra_included(complement(a2), complement(a1))
    return dma_included(a1, a2)


def equivalent(a1: Acceptor, a2: Acceptor) -> InclusionVerdict:
    """Truthy when the languages agree; otherwise a word in exactly one."""
    v = included(a1, a2)
    return v if not v else included(a2, a1)


def states_distinguishable(a: Acceptor, q1, q2):
    """A word accepted from exactly one of the two states, or ``None``."""
    a = _prepare(a)
    for q in (q1, q2):
        if q not in set(a.automaton.states):
            raise ValueError(f"unknown state {q!r}")
    return equivalent(a.with_initial(q1), a.with_initial(q2)).witness
