"""A family of small nondeterministic acceptors whose shortest informative
examples grow exponentially.

For a bound ``M`` let ``ell`` be the product of the primes up to ``M``.  The
acceptor built here accepts ``a^k b^ω`` exactly when ``k`` is not a positive
multiple of ``ell``; it has only ``2 + sum of primes`` states, but the
shortest rejected word of that shape has length ``ell + 1``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .core import (
    Acceptor, Alphabet, Automaton, Buchi, CoBuchi, Muller, UPWord, convert, lasso_accepts,
)

MAX_BOUND = 13


def primes_up_to(bound: int) -> list:
    return [p for p in range(2, bound + 1) if all(p % d for d in range(2, math.isqrt(p) + 1))]


@dataclass(frozen=True)
class PrimeFamily:
    bound: int
    primes: tuple
    ell: int

    @classmethod
    def of(cls, bound: int) -> "PrimeFamily":
        if bound < 2:
            raise ValueError("bound must be at least 2")
        primes = tuple(primes_up_to(bound))
        return cls(bound, primes, math.prod(primes))


def _family(bound) -> PrimeFamily:
    return bound if isinstance(bound, PrimeFamily) else PrimeFamily.of(bound)


def _automaton(fam: PrimeFamily) -> Automaton:
    cycles = [f"{p}.{i}" for p in fam.primes for i in range(p)]
    states = ("0", "b", *cycles)
    trans = {("0", "a"): {f"{p}.1" for p in fam.primes}, ("0", "b"): {"b"},
             ("b", "b"): {"b"}}
    for p in fam.primes:
        for i in range(p):
            trans[(f"{p}.{i}", "a")] = {f"{p}.{(i + 1) % p}"}
            if i:
                trans[(f"{p}.{i}", "b")] = {"b"}
    return Automaton(Alphabet.of("ab"), states, "0", trans)


def build_bm(bound) -> Acceptor:
    """Büchi acceptor: state ``0``, sink ``b``, and a counter ``p.i`` modulo
    each prime ``p``; reading ``b`` from a counter at zero is impossible."""
    return Acceptor(_automaton(_family(bound)), Buchi({"b"}))


def build_cm(bound) -> Acceptor:
    """CoBüchi acceptor for the same language: every state except ``b`` must
    be left for good."""
    m = _automaton(_family(bound))
    return Acceptor(m, CoBuchi(set(m.states) - {"b"}))


def variants(bound) -> dict:
    """The same language under parity, Rabin and Muller conditions."""
    bm = build_bm(bound)
    return {
        "buchi": bm,
        "cobuchi": build_cm(bound),
        "parity": convert(bm, "parity"),
        "rabin": convert(bm, "rabin"),
        "muller": bm.with_condition(Muller([{"b"}])),
    }


def bm_oracle(bound, k: int) -> bool:
    """Membership of ``a^k b^ω`` by arithmetic."""
    return k == 0 or k % _family(bound).ell != 0


def shortest_rejected(a: Acceptor, limit: int):
    """Length of the shortest word ``a^k(b)`` the acceptor rejects, found by
    tracking the states reachable after each block of ``a``."""
    m = a.automaton
    loops_on_b = {q for q in m.states
                  if lasso_accepts(Acceptor(m.with_initial(q), a.condition), UPWord("", "b"))}
    current = {m.initial}
    for k in range(limit + 1):
        if not current & loops_on_b:
            return k + 1
        current = set().union(*(m.successors(q, "a") for q in current))
    return None


@dataclass(frozen=True)
class BlowupRow:
    bound: int
    states: int
    ell: int
    shortest: int


def demo_blowup(bound: int) -> list:
    """One row per bound from 2 up to ``bound``."""
    if bound > MAX_BOUND:
        raise ValueError(f"bound above {MAX_BOUND} is too large")
    rows = []
    for m in range(2, bound + 1):
        fam = PrimeFamily.of(m)
        bm = build_bm(fam)
        rows.append(BlowupRow(m, len(bm.automaton.states), fam.ell,
                              shortest_rejected(bm, fam.ell + 1)))
    return rows


def format_table(rows) -> str:
    head = ("M", "states", "ell", "shortest rejected")
    body = [(str(r.bound), str(r.states), str(r.ell), str(r.shortest)) for r in rows]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    return "\n".join("  ".join(x.rjust(w) for x, w in zip(line, widths))
                     for line in [head, *body])


def format_csv(rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["M", "states", "ell", "shortest_rejected"])
    for r in rows:
        writer.writerow([r.bound, r.states, r.ell, r.shortest])
    return out.getvalue()
