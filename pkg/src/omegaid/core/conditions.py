"""The six acceptance conditions, each judged on the set of states a run
visits infinitely often."""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Mapping


def _pairs(pairs) -> tuple:
    out = []
    for g, b in pairs:
        p = (frozenset(g), frozenset(b))
        if p not in out:
            out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class Buchi:
    accepting: frozenset
    kind: ClassVar[str] = "buchi"
    letter: ClassVar[str] = "B"

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    def holds(self, inf) -> bool:
        return not self.accepting.isdisjoint(inf)

    def mentioned(self) -> set:
        return set(self.accepting)

    def renamed(self, f) -> "Buchi":
        return Buchi(frozenset(map(f, self.accepting)))

    def restricted(self, keep) -> "Buchi":
        return Buchi(self.accepting & frozenset(keep))

    @property
    def index(self) -> int:
        return 1


@dataclass(frozen=True)
class CoBuchi:
    rejecting: frozenset
    kind: ClassVar[str] = "cobuchi"
    letter: ClassVar[str] = "C"

    def __post_init__(self):
        object.__setattr__(self, "rejecting", frozenset(self.rejecting))

    def holds(self, inf) -> bool:
        return self.rejecting.isdisjoint(inf)

    def mentioned(self) -> set:
        return set(self.rejecting)

    def renamed(self, f) -> "CoBuchi":
        return CoBuchi(frozenset(map(f, self.rejecting)))

    def restricted(self, keep) -> "CoBuchi":
        return CoBuchi(self.rejecting & frozenset(keep))

    @property
    def index(self) -> int:
        return 1


@dataclass(frozen=True)
class Parity:
    """Accept when the least color seen infinitely often is odd."""

    colors: Mapping
    kind: ClassVar[str] = "parity"
    letter: ClassVar[str] = "P"

    def __post_init__(self):
        colors = dict(self.colors)
        for q, c in colors.items():
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"color of {q!r} must be a natural number")
        object.__setattr__(self, "colors", colors)

    def color(self, q) -> int:
        return self.colors.get(q, 0)

    def holds(self, inf) -> bool:
        return min(self.color(q) for q in inf) % 2 == 1

    def mentioned(self) -> set:
        return set(self.colors)

    def renamed(self, f) -> "Parity":
        return Parity({f(q): c for q, c in self.colors.items()})

    def restricted(self, keep) -> "Parity":
        keep = set(keep)
        return Parity({q: c for q, c in self.colors.items() if q in keep})

    @property
    def index(self) -> int:
        return 1


@dataclass(frozen=True)
class Rabin:
    """Accept when some pair (G, B) has G seen and B avoided."""

    pairs: tuple
    kind: ClassVar[str] = "rabin"
    letter: ClassVar[str] = "R"

    def __post_init__(self):
        object.__setattr__(self, "pairs", _pairs(self.pairs))

    def holds(self, inf) -> bool:
        return any(not g.isdisjoint(inf) and b.isdisjoint(inf) for g, b in self.pairs)

    def mentioned(self) -> set:
        return set().union(*(g | b for g, b in self.pairs))

    def renamed(self, f) -> "Rabin":
        return Rabin([(map(f, g), map(f, b)) for g, b in self.pairs])

    def restricted(self, keep) -> "Rabin":
        keep = frozenset(keep)
        return Rabin([(g & keep, b & keep) for g, b in self.pairs])

    @property
    def index(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Streett:
    """Accept when every pair (G, B) has G avoided or B seen."""

    pairs: tuple
    kind: ClassVar[str] = "streett"
    letter: ClassVar[str] = "S"

    def __post_init__(self):
        object.__setattr__(self, "pairs", _pairs(self.pairs))

    def holds(self, inf) -> bool:
        return all(g.isdisjoint(inf) or not b.isdisjoint(inf) for g, b in self.pairs)

    def mentioned(self) -> set:
        return set().union(*(g | b for g, b in self.pairs))

    def renamed(self, f) -> "Streett":
        return Streett([(map(f, g), map(f, b)) for g, b in self.pairs])

    def restricted(self, keep) -> "Streett":
        keep = frozenset(keep)
        return Streett([(g & keep, b & keep) for g, b in self.pairs])

    @property
    def index(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Muller:
    """Accept when the infinitely visited set is one of ``family``."""

    family: tuple
    kind: ClassVar[str] = "muller"
    letter: ClassVar[str] = "M"

    def __post_init__(self):
        fam = tuple(dict.fromkeys(frozenset(s) for s in self.family))
        object.__setattr__(self, "family", fam)

    def holds(self, inf) -> bool:
        return frozenset(inf) in set(self.family)

    def mentioned(self) -> set:
        return set().union(*self.family)

    def renamed(self, f) -> "Muller":
        return Muller([map(f, s) for s in self.family])

    def restricted(self, keep) -> "Muller":
        keep = frozenset(keep)
        return Muller([s for s in self.family if s <= keep])

    @property
    def index(self) -> int:
        return len(self.family)


CONDITIONS = {c.kind: c for c in (Buchi, CoBuchi, Parity, Rabin, Streett, Muller)}
