"""Alphabets, finite words, ultimately periodic words and labeled samples.

Symbols are single characters, so a finite word is a plain ``str``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class InconsistentSample(ValueError):
    """Raised when a word is given both labels."""


@dataclass(frozen=True)
class Alphabet:
    """An ordered, non-empty set of single-character symbols."""

    symbols: tuple

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("alphabet must not be empty")
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"symbol {s!r} is not a single character")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet has repeated symbols")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "Alphabet":
        return cls(tuple(symbols))

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def check(self, word: str) -> str:
        for s in word:
            if s not in self._index:
                raise ValueError(f"symbol {s!r} is not in the alphabet")
        return word

    def key(self, word: str) -> tuple:
        """Sort key realising the shortlex order on finite words."""
        idx = self._index
        try:
            return (len(word), tuple(idx[s] for s in word))
        except KeyError as err:
            raise ValueError(f"symbol {err.args[0]!r} is not in the alphabet") from None

    def shortlex_cmp(self, x: str, y: str) -> int:
        kx, ky = self.key(x), self.key(y)
        return (kx > ky) - (kx < ky)

    def words_up_to(self, length: int) -> Iterator[str]:
        """All words of length at most ``length`` in shortlex order."""
        layer = [""]
        for _ in range(length + 1):
            yield from layer
            layer = [w + s for w in layer for s in self.symbols]


def shortlex_cmp(x: str, y: str, alphabet: Alphabet) -> int:
    """Return -1, 0 or 1 as ``x`` is shortlex-smaller, equal or larger than ``y``."""
    return alphabet.shortlex_cmp(x, y)


def _primitive_root(v: str) -> str:
    n = len(v)
    for p in range(1, n + 1):
        if n % p == 0 and v[:p] * (n // p) == v:
            return v[:p]
    return v


def _canonical(u: str, v: str) -> tuple:
    v = _primitive_root(v)
    while u and u[-1] == v[-1]:
        u = u[:-1]
        v = v[-1] + v[:-1]
    return u, v


@dataclass(frozen=True)
class UPWord:
    """The ultimately periodic word ``prefix`` followed by ``period`` forever.

    Instances are always stored in canonical form: the period is primitive and
    the prefix is as short as possible.  Two instances are therefore equal
    exactly when they denote the same infinite word.
    """

    prefix: str
    period: str

    def __post_init__(self):
        if not isinstance(self.prefix, str) or not isinstance(self.period, str):
            raise TypeError("prefix and period must be strings")
        if not self.period:
            raise ValueError("period must be non-empty")
        u, v = _canonical(self.prefix, self.period)
        object.__setattr__(self, "prefix", u)
        object.__setattr__(self, "period", v)

    _SYNTAX = re.compile(r"^\s*([^()\s]*)\(([^()\s]+)\)\s*$")

    @classmethod
    def parse(cls, text: str) -> "UPWord":
        """Parse ``u(v)`` notation, e.g. ``ab(ba)`` or ``(a)``."""
        m = cls._SYNTAX.match(text)
        if not m:
            raise ValueError(f"not an ultimately periodic word: {text!r}")
        return cls(m.group(1), m.group(2))

    def __str__(self) -> str:
        return f"{self.prefix}({self.period})"

    @property
    def length(self) -> int:
        return len(self.prefix) + len(self.period)

    def symbol_at(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def take(self, n: int) -> str:
        """The first ``n`` symbols."""
        return "".join(self.symbol_at(i) for i in range(n))

    def drop(self, n: int) -> "UPWord":
        """The suffix that remains after removing the first ``n`` symbols."""
        if n <= len(self.prefix):
            return UPWord(self.prefix[n:], self.period)
        r = (n - len(self.prefix)) % len(self.period)
        return UPWord("", self.period[r:] + self.period[:r])

    def prepend(self, x: str) -> "UPWord":
        return UPWord(x + self.prefix, self.period)

    def symbols(self) -> set:
        return set(self.prefix) | set(self.period)


def up_canonicalize(u: str, v: str) -> UPWord:
    return UPWord(u, v)


def up_equal(w1: UPWord, w2: UPWord) -> bool:
    """Compare two words on a prefix long enough to decide equality."""
    n = max(len(w1.prefix), len(w2.prefix)) + len(w1.period) * len(w2.period)
    return w1.take(n) == w2.take(n)


def up_suffixes(w: UPWord) -> list:
    """Every suffix of ``w``, each as a canonical word, without repetition."""
    out = []
    for i in range(len(w.prefix)):
        out.append(UPWord(w.prefix[i:], w.period))
    v = w.period
    for i in range(len(v)):
        out.append(UPWord("", v[i:] + v[:i]))
    return list(dict.fromkeys(out))


class Sample:
    """A finite set of labeled ultimately periodic words."""

    def __init__(self, examples: Iterable = ()):
        self._labels: dict = {}
        for word, label in examples:
            self.add(word, label)

    def add(self, word, label) -> None:
        if isinstance(word, str):
            word = UPWord.parse(word)
        label = bool(label)
        old = self._labels.get(word)
        if old is not None and old != label:
            raise InconsistentSample(f"{word} is labeled both ways")
        self._labels[word] = label

    def update(self, other: "Sample") -> None:
        for word, label in other:
            self.add(word, label)

    def __or__(self, other: "Sample") -> "Sample":
        out = Sample(self)
        out.update(other)
        return out

    def __iter__(self):
        return iter(self._labels.items())

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, word) -> bool:
        return word in self._labels

    def __eq__(self, other) -> bool:
        return isinstance(other, Sample) and self._labels == other._labels

    def get(self, word, default=None):
        return self._labels.get(word, default)

    def __getitem__(self, word) -> bool:
        return self._labels[word]

    @property
    def words(self) -> list:
        return list(self._labels)

    @property
    def positives(self) -> list:
        return [w for w, lab in self._labels.items() if lab]

    @property
    def negatives(self) -> list:
        return [w for w, lab in self._labels.items() if not lab]

    @property
    def length(self) -> int:
        return sum(w.length for w in self._labels)

    def flipped(self) -> "Sample":
        return Sample((w, not lab) for w, lab in self)

    def symbols(self) -> set:
        out = set()
        for w in self._labels:
            out |= w.symbols()
        return out

    def __repr__(self) -> str:
        body = ", ".join(f"{w}:{int(lab)}" for w, lab in self)
        return f"Sample({{{body}}})"
