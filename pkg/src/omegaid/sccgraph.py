"""SCCs of automata, witness words, products and decreasing SCC forests.

Here an SCC is a non-empty set of states in which every state reaches every
state (itself included) by a non-empty path that stays inside the set.
"""

from __future__ import annotations

from .core import Acceptor, Automaton, Parity, UPWord
from .graphs import nontrivial_components, reachable


def _order_key(m: Automaton):
    acc = m.access_strings
    key = m.alphabet.key

    def k(q):
        if q in acc:
            return (0, key(acc[q]))
        return (1, m.position(q))

    return k


def max_sccs(m: Automaton, s) -> list:
    """Maximal SCCs inside ``s``, ordered by their least access string."""
    s = set(s)
    comps = nontrivial_components(
        [q for q in m.states if q in s],
        lambda q: [t for t in m.graph_successors(q) if t in s])
    k = _order_key(m)
    return sorted((frozenset(c) for c in comps), key=lambda c: min(map(k, c)))


def is_scc(m: Automaton, s) -> bool:
    s = frozenset(s)
    return bool(s) and max_sccs(m, s) == [s]


def _path_inside(m: Automaton, start, inside, goal) -> str:
    """Shortest non-empty word leading from ``start`` through ``inside`` to a
    state satisfying ``goal``; ties go to the alphabetically first."""
    frontier = [(start, "")]
    seen = set()
    while frontier:
        nxt = []
        for q, path in frontier:
            for a in m.alphabet:
                t = m.step(q, a)
                if t not in inside:
                    continue
                if goal(t):
                    return path + a
                if t not in seen:
                    seen.add(t)
                    nxt.append((t, path + a))
        frontier = nxt
    raise ValueError("no path inside the set")


def witness(c, m: Automaton) -> UPWord:
    """A word whose run visits exactly the states of ``c`` infinitely often.

    The prefix reaches the state of ``c`` with least access string; the period
    is a closed tour inside ``c`` that always heads for the nearest state not
    yet visited.
    """
    c = frozenset(c)
    if not is_scc(m, c):
        raise ValueError("not an SCC")
    acc = m.access_strings
    reached = [q for q in c if q in acc]
    if not reached:
        raise ValueError("SCC is not reachable")
    key = m.alphabet.key
    anchor = min(reached, key=lambda q: key(acc[q]))
    if len(c) == 1:
        loop = next(a for a in m.alphabet if m.step(anchor, a) == anchor)
        return UPWord(acc[anchor], loop)
    visited = {anchor}
    here = anchor
    period = ""
    while len(visited) < len(c):
        path = _path_inside(m, here, c, lambda t: t not in visited)
        for a in path:
            here = m.step(here, a)
            visited.add(here)
        period += path
    if here != anchor:
        period += _path_inside(m, here, c, lambda t: t == anchor)
    return UPWord(acc[anchor], period)


def product(m1: Automaton, m2: Automaton, reachable_only: bool = False) -> Automaton:
    """Synchronous product; states are pairs ``(q1, q2)``."""
    if m1.alphabet != m2.alphabet:
        raise ValueError("alphabets differ")
    for m in (m1, m2):
        if not (m.is_deterministic and m.is_complete):
            raise ValueError("product needs deterministic complete automata")
    sigma = m1.alphabet

    def succ(p):
        return [(m1.step(p[0], a), m2.step(p[1], a)) for a in sigma]

    start = (m1.initial, m2.initial)
    if reachable_only:
        states = reachable([start], succ)
    else:
        states = [(p, q) for p in m1.states for q in m2.states]
    trans = {}
    for p in states:
        for a, t in zip(sigma, succ(p)):
            trans[(p, a)] = frozenset([t])
    return Automaton(sigma, tuple(states), start, trans)


def pi1(s) -> frozenset:
    return frozenset(p[0] for p in s)


def pi2(s) -> frozenset:
    return frozenset(p[1] for p in s)


class SccForest:
    """A decreasing forest of SCCs.

    Each node is a frozenset of states.  The children of a node are pairwise
    disjoint proper subsets of it.  ``labels`` optionally maps nodes to
    integers (parities or colors).
    """

    def __init__(self, roots, children: dict, labels: dict | None = None):
        self.roots = tuple(roots)
        self._children = {n: tuple(cs) for n, cs in children.items()}
        self.labels = dict(labels or {})
        self._parent = {}
        for n in self.nodes:
            for ch in self.children(n):
                self._parent[ch] = n

    @property
    def nodes(self) -> list:
        """All nodes in preorder."""
        out = []
        stack = list(reversed(self.roots))
        while stack:
            n = stack.pop()
            out.append(n)
            stack.extend(reversed(self.children(n)))
        return out

    def children(self, node) -> tuple:
        return self._children.get(node, ())

    def parent(self, node):
        return self._parent.get(node)

    def delta(self, node) -> frozenset:
        """States of ``node`` that lie in none of its children."""
        return node.difference(*self.children(node))

    def depth(self, node) -> int:
        d = 0
        while node in self._parent:
            node = self._parent[node]
            d += 1
        return d

    def node_of(self, d):
        """The deepest node containing ``d``."""
        d = frozenset(d)
        level = self.roots
        found = None
        while True:
            inner = [n for n in level if d <= n]
            if not inner:
                break
            found = inner[0]
            level = self.children(found)
        if found is None:
            raise ValueError("set lies under no root")
        return found

    def merged(self, node) -> "SccForest":
        """Remove a non-root ``node``; its children move up to its parent."""
        parent = self.parent(node)
        if parent is None:
            raise ValueError("cannot merge a root")
        children = dict(self._children)
        siblings = []
        for ch in children[parent]:
            siblings.extend(children.get(node, ()) if ch == node else [ch])
        children[parent] = tuple(siblings)
        children.pop(node, None)
        labels = {n: v for n, v in self.labels.items() if n != node}
        return SccForest(self.roots, children, labels)

    def __len__(self) -> int:
        return len(self.nodes)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SccForest)
                and set(self.roots) == set(other.roots)
                and all(set(self.children(n)) == set(other.children(n)) for n in self.nodes)
                and set(self.nodes) == set(other.nodes))

    def outline(self, name=str) -> str:
        """Indented text rendering, one node per line."""
        lines = []
        for n in self.nodes:
            states = " ".join(sorted(map(name, n)))
            label = f" [{self.labels[n]}]" if n in self.labels else ""
            lines.append("  " * self.depth(n) + "{" + states + "}" + label)
        return "\n".join(lines)

    def to_dot(self, name=str) -> str:
        ids = {n: f"n{i}" for i, n in enumerate(self.nodes)}
        lines = ["digraph forest {", "  node [shape=box];"]
        for n in self.nodes:
            states = " ".join(sorted(map(name, n)))
            label = f" ({self.labels[n]})" if n in self.labels else ""
            lines.append(f'  {ids[n]} [label="{{{states}}}{label}"];')
        for n in self.nodes:
            for ch in self.children(n):
                lines.append(f"  {ids[n]} -> {ids[ch]};")
        lines.append("}")
        return "\n".join(lines)


def _parity_of(p: Acceptor):
    if not isinstance(p.condition, Parity):
        raise ValueError("a parity acceptor is required")
    return p.condition


def min_states_forest(p: Acceptor) -> SccForest:
    """Forest whose children split off the least-colored states of a node.

    Node labels are the parity of the least color in the node.
    """
    coloring = _parity_of(p)
    m = p.automaton
    children = {}
    labels = {}

    def grow(node):
        low = min(coloring.color(q) for q in node)
        labels[node] = low % 2
        rest = {q for q in node if coloring.color(q) != low}
        kids = max_sccs(m, rest)
        children[node] = kids
        for k in kids:
            grow(k)

    roots = max_sccs(m, m.states)
    for r in roots:
        grow(r)
    return SccForest(roots, children, labels)


def canonical_forest(p: Acceptor) -> SccForest:
    """Merge every node into its parent while the two share a parity."""
    forest = min_states_forest(p)
    while True:
        same = next((n for n in forest.nodes
                     if forest.parent(n) is not None
                     and forest.labels[n] == forest.labels[forest.parent(n)]), None)
        if same is None:
            return forest
        forest = forest.merged(same)


def canonical_coloring(p: Acceptor) -> dict:
    """Colors from the canonical forest: a root gets its parity, a child one
    more than its parent, and states in no SCC get 0."""
    forest = canonical_forest(p)
    colors = {q: 0 for q in p.automaton.states}
    node_color = {}
    for n in forest.nodes:
        parent = forest.parent(n)
        node_color[n] = forest.labels[n] if parent is None else node_color[parent] + 1
        for q in forest.delta(n):
            colors[q] = node_color[n]
    return colors
