"""Transition structures without acceptance."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Mapping

from .words import Alphabet


@dataclass(frozen=True)
class Automaton:
    """A finite automaton over ``alphabet``.

    ``transitions`` maps ``(state, symbol)`` to a frozenset of successors.
    Missing keys mean no transition.  States are arbitrary hashable values and
    keep the order in which they are listed.
    """

    alphabet: Alphabet
    states: tuple
    initial: Hashable
    transitions: Mapping = field(repr=False)

    def __post_init__(self):
        states = tuple(self.states)
        if len(set(states)) != len(states):
            raise ValueError("repeated state")
        if not states:
            raise ValueError("an automaton needs at least one state")
        if self.initial not in set(states):
            raise ValueError(f"initial state {self.initial!r} is not a state")
        known = set(states)
        clean = {}
        for (q, a), targets in self.transitions.items():
            if q not in known:
                raise ValueError(f"unknown state {q!r}")
            if a not in self.alphabet:
                raise ValueError(f"unknown symbol {a!r}")
            targets = frozenset(targets)
            bad = targets - known
            if bad:
                raise ValueError(f"unknown state {next(iter(bad))!r}")
            if targets:
                clean[(q, a)] = targets
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "transitions", clean)

    @classmethod
    def from_table(cls, alphabet, table: Mapping, initial, states=None,
                   nondeterministic=False) -> "Automaton":
        """Build from ``{state: {symbol: target}}``.

        With ``nondeterministic=True`` each target is a collection of states.
        """
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet.of(alphabet)
        if states is None:
            states = list(table)
        trans = {}
        for q, row in table.items():
            for a, t in row.items():
                trans[(q, a)] = frozenset(t) if nondeterministic else frozenset([t])
        return cls(alphabet, tuple(states), initial, trans)

    @cached_property
    def is_deterministic(self) -> bool:
        return all(len(t) == 1 for t in self.transitions.values())

    @cached_property
    def is_complete(self) -> bool:
        return len(self.transitions) == len(self.states) * len(self.alphabet)

    @cached_property
    def _delta(self) -> dict:
        return {k: next(iter(t)) for k, t in self.transitions.items() if len(t) == 1}

    @cached_property
    def _order(self) -> dict:
        return {q: i for i, q in enumerate(self.states)}

    def position(self, q) -> int:
        """Index of ``q`` in the state list."""
        return self._order[q]

    def step(self, q, a):
        """The unique successor of ``q`` on ``a``, or ``None`` if there is none."""
        t = self._delta.get((q, a))
        if t is None and len(self.transitions.get((q, a), ())) > 1:
            raise ValueError("step() called on a nondeterministic transition")
        return t

    def successors(self, q, a) -> frozenset:
        return self.transitions.get((q, a), frozenset())

    def run(self, word: str, start=None):
        """State reached after reading ``word``, or ``None`` if the run dies."""
        q = self.initial if start is None else start
        for a in word:
            q = self.step(q, a)
            if q is None:
                return None
        return q

    @cached_property
    def _graph(self) -> dict:
        out = {}
        for q in self.states:
            succ = []
            for a in self.alphabet:
                succ.extend(sorted(self.successors(q, a), key=self._order.__getitem__))
            out[q] = tuple(dict.fromkeys(succ))
        return out

    def graph_successors(self, q) -> tuple:
        """All states reachable from ``q`` in one step, without repetition."""
        return self._graph[q]

    @cached_property
    def access_strings(self) -> dict:
        """Shortlex-least word reaching each reachable state."""
        acc = {self.initial: ""}
        queue = [self.initial]
        i = 0
        while i < len(queue):
            q = queue[i]
            i += 1
            for a in self.alphabet:
                for t in sorted(self.successors(q, a), key=self._order.__getitem__):
                    if t not in acc:
                        acc[t] = acc[q] + a
                        queue.append(t)
        return acc

    @cached_property
    def reachable_states(self) -> tuple:
        return tuple(self.access_strings)

    def with_initial(self, q) -> "Automaton":
        if q == self.initial:
            return self
        return Automaton(self.alphabet, self.states, q, self.transitions)

    def restricted(self, keep) -> "Automaton":
        """Sub-automaton on the states in ``keep`` (which must hold the initial state)."""
        keep = set(keep)
        states = tuple(q for q in self.states if q in keep)
        trans = {}
        for (q, a), t in self.transitions.items():
            if q in keep and t & keep:
                trans[(q, a)] = t & keep
        return Automaton(self.alphabet, states, self.initial, trans)

    def renamed(self, f) -> "Automaton":
        """Apply the injective renaming ``f`` to every state."""
        trans = {(f(q), a): frozenset(f(t) for t in ts) for (q, a), ts in self.transitions.items()}
        return Automaton(self.alphabet, tuple(f(q) for q in self.states), f(self.initial), trans)

    def table(self) -> dict:
        """Deterministic transition table ``{state: {symbol: target}}``."""
        return {q: {a: self.step(q, a) for a in self.alphabet if (q, a) in self.transitions}
                for q in self.states}
