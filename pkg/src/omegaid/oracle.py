"""Slow, exhaustive reference procedures used to cross-check the fast ones.

Nothing here shares code with the SCC, witness or decision modules: strong
connectivity is checked by plain reachability, and witnesses are built by a
separate breadth-first tour.
"""

from __future__ import annotations

from itertools import combinations, product as cartesian

from .core import Acceptor, Automaton, Buchi, Muller, Parity, UPWord
from .decide import InclusionVerdict

DEFAULT_BOUND = 64


def _reach_inside(m: Automaton, start, inside) -> set:
    """States reachable from ``start`` by a non-empty path within ``inside``."""
    seen = set()
    todo = [start]
    while todo:
        q = todo.pop()
        for a in m.alphabet:
            t = m.step(q, a)
            if t in inside and t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def _strongly_connected(m: Automaton, s: frozenset) -> bool:
    return bool(s) and all(_reach_inside(m, q, s) >= s for q in s)


def enumerate_sccs(m: Automaton, bound: int = DEFAULT_BOUND) -> list:
    """Every reachable SCC of a deterministic automaton, small sets first.

    A strongly connected set either is a component of its enclosing set or
    misses some state of it, so deleting one state at a time from the
    components reaches every such set.
    """
    if len(m.states) > bound:
        raise ValueError(f"{len(m.states)} states exceed the bound {bound}")
    reach = _reach_inside(m, m.initial, set(m.states)) | {m.initial}
    found = set()
    todo = [frozenset(reach)]
    expanded = set()
    while todo:
        s = todo.pop()
        if s in expanded:
            continue
        expanded.add(s)
        for comp in _components(m, s):
            if comp not in found:
                found.add(comp)
                for q in comp:
                    todo.append(comp - {q})
    return sorted(found, key=lambda c: (len(c), sorted(map(m.position, c))))


def _components(m: Automaton, s: frozenset) -> list:
    """Maximal strongly connected subsets of ``s`` (with a cycle): the states
    both reachable from and co-reachable to a state by non-empty paths."""
    preds = {q: set() for q in s}
    for q in s:
        for a in m.alphabet:
            t = m.step(q, a)
            if t in s:
                preds[t].add(q)
    out = []
    left = set(s)
    while left:
        q = next(iter(left))
        fwd = _reach_inside(m, q, s)
        bwd = set()
        todo = [q]
        while todo:
            for p in preds[todo.pop()]:
                if p not in bwd:
                    bwd.add(p)
                    todo.append(p)
        comp = frozenset(fwd & bwd)
        left -= comp | {q}
        if comp:
            out.append(comp)
    return out


def _tour(m: Automaton, c: frozenset) -> UPWord:
    """Prefix to the first state of ``c`` found by breadth-first search, then
    a period that walks to every state of ``c`` in turn and back."""
    parent = {m.initial: ""}
    queue = [m.initial]
    for q in queue:
        for a in m.alphabet:
            t = m.step(q, a)
            if t not in parent:
                parent[t] = parent[q] + a
                queue.append(t)
    start = next(q for q in queue if q in c)

    def path(src, dst):
        paths = {}
        frontier = [(src, "")]
        while frontier:
            q, w = frontier.pop(0)
            for a in m.alphabet:
                t = m.step(q, a)
                if t in c and t not in paths:
                    paths[t] = w + a
                    frontier.append((t, w + a))
        return paths[dst]

    cycle = ""
    here = start
    for q in sorted(c, key=m.position):
        if q != here:
            cycle += path(here, q)
            here = q
    cycle += path(here, start)
    return UPWord(parent[start], cycle)


def _product(m1: Automaton, m2: Automaton) -> Automaton:
    start = (m1.initial, m2.initial)
    states = [start]
    trans = {}
    for p in states:
        for a in m1.alphabet:
            t = (m1.step(p[0], a), m2.step(p[1], a))
            trans[(p, a)] = {t}
            if t not in states:
                states.append(t)
    return Automaton(m1.alphabet, tuple(states), start, trans)


def counterexample_sets(a1: Acceptor, a2: Acceptor, bound: int = DEFAULT_BOUND):
    """Product automaton and every reachable SCC accepted left, rejected right."""
    a1, a2 = a1.completed, a2.completed
    m = _product(a1.automaton, a2.automaton)
    bad = [c for c in enumerate_sccs(m, bound)
           if a1.condition.holds({p[0] for p in c})
           and not a2.condition.holds({p[1] for p in c})]
    return m, bad


def _preceq_key(m: Automaton):
    acc = {m.initial: ""}
    queue = [m.initial]
    for q in queue:
        for a in m.alphabet:
            t = m.step(q, a)
            if t not in acc:
                acc[t] = acc[q] + a
                queue.append(t)
    key = m.alphabet.key
    return lambda s: (len(s), tuple(sorted(key(acc[q]) for q in s)))


def brute_inclusion(a1: Acceptor, a2: Acceptor, bound: int = DEFAULT_BOUND) -> InclusionVerdict:
    m, bad = counterexample_sets(a1, a2, bound)
    return InclusionVerdict(_tour(m, bad[0])) if bad else InclusionVerdict()


def largest_counterexample(a1: Acceptor, a2: Acceptor, bound: int = DEFAULT_BOUND):
    """The ⪯-greatest counterexample infinity set in the product, or ``None``."""
    m, bad = counterexample_sets(a1, a2, bound)
    return max(bad, key=_preceq_key(m)) if bad else None


def brute_equivalent(a1: Acceptor, a2: Acceptor, bound: int = DEFAULT_BOUND) -> bool:
    return bool(brute_inclusion(a1, a2, bound)) and bool(brute_inclusion(a2, a1, bound))


def _first_equivalent(target: Acceptor, m: Automaton, conditions):
    for cond in conditions:
        hyp = Acceptor(m, cond)
        if brute_equivalent(hyp, target):
            return hyp
    return None


def _congruence(a: Acceptor) -> Automaton:
    from .congruence import right_con
    return right_con(a).automaton


def _check(m: Automaton, limit: int):
    if len(m.states) > limit:
        raise ValueError(f"{len(m.states)} congruence states exceed the bound {limit}")


def brute_test_in_ib(a: Acceptor, limit: int = 4):
    """Try every accepting set on the right-congruence automaton."""
    m = _congruence(a)
    _check(m, limit)
    subsets = (s for r in range(len(m.states) + 1) for s in combinations(m.states, r))
    return _first_equivalent(a, m, (Buchi(s) for s in subsets))


def brute_test_in_ip(a: Acceptor, limit: int = 3):
    """Try every coloring with colors up to the state count."""
    m = _congruence(a)
    _check(m, limit)
    n = len(m.states)
    colorings = cartesian(range(n + 1), repeat=n)
    return _first_equivalent(a, m, (Parity(dict(zip(m.states, cs))) for cs in colorings))


def brute_test_in_im(a: Acceptor, limit: int = 3):
    """Try every family of reachable SCCs."""
    m = _congruence(a)
    _check(m, limit)
    sccs = enumerate_sccs(m)
    families = (f for r in range(len(sccs) + 1) for f in combinations(sccs, r))
    return _first_equivalent(a, m, (Muller(f) for f in families))
