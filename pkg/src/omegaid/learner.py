"""Passive learners that turn a labeled sample into a consistent acceptor.

When the sample contains a characteristic sample of a target acceptor built
on its right-congruence automaton, the result is equivalent to the target.
Otherwise the learners may fall back to a prefix-tree acceptor that simply
memorises the sample.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Acceptor, Alphabet, Automaton, Buchi, CoBuchi, Muller, Parity, Rabin, Sample,
    accepts, complement, convert, run_inf, up_suffixes,
)

CLASSES = {"ib": "buchi", "ic": "cobuchi", "ip": "parity",
           "ir": "rabin", "is": "streett", "im": "muller"}


@dataclass(frozen=True)
class LearnerOutput:
    acceptor: Acceptor
    defaulted: bool


def sample_alphabet(sample: Sample, alphabet=None) -> Alphabet:
    """The given alphabet, or the sorted symbols occurring in ``sample``."""
    if alphabet is not None:
        alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet.of(alphabet)
        stray = sample.symbols() - set(alphabet)
        if stray:
            raise ValueError(f"sample uses symbol {sorted(stray)[0]!r} outside the alphabet")
        return alphabet
    symbols = sorted(sample.symbols())
    if not symbols:
        raise ValueError("cannot infer an alphabet from an empty sample")
    return Alphabet.of(symbols)


def consistent(a: Acceptor, sample: Sample) -> bool:
    return all(accepts(a, w) == label for w, label in sample)


def _first_difference(w1, w2) -> int:
    n = max(len(w1.prefix), len(w2.prefix)) + len(w1.period) * len(w2.period)
    return next(i for i in range(n) if w1.symbol_at(i) != w2.symbol_at(i))


def default_acceptor(sample: Sample, kind: str, alphabet=None) -> Acceptor:
    """A prefix tree holding, for each example, its shortest prefix that no
    other example shares; leaves loop on every symbol.

    ``kind`` is a condition name such as ``"buchi"``.
    """
    sigma = sample_alphabet(sample, alphabet)
    words = sample.words
    leaves = {}
    for w in words:
        length = max((_first_difference(w, o) + 1 for o in words if o != w), default=0)
        leaves[w.take(length)] = sample[w]
    nodes = {""}
    for leaf in leaves:
        nodes.update(leaf[:i] for i in range(len(leaf)))
    order = sorted(nodes | set(leaves), key=sigma.key)
    trans = {}
    for x in order:
        for s in sigma:
            if x in leaves:
                trans[(x, s)] = {x}
            elif x + s in nodes or x + s in leaves:
                trans[(x, s)] = {x + s}
    if not sample:
        trans = {("", s): {""} for s in sigma}
    m = Automaton(sigma, tuple(order), "", trans)
    positive = {x for x, label in leaves.items() if label}
    buchi = Acceptor(m, Buchi(positive)).completed
    if kind in ("cobuchi", "streett"):
        others = set(buchi.automaton.states) - positive
        co = buchi.with_condition(CoBuchi(others))
        return co if kind == "cobuchi" else convert(co, "streett")
    if kind == "muller":
        return buchi.with_condition(Muller([{q} for q in positive]))
    if kind in ("parity", "rabin"):
        return convert(buchi, kind)
    if kind == "buchi":
        return buchi
    raise ValueError(f"unknown acceptor kind {kind!r}")


def learn_aut(sample: Sample, alphabet=None) -> Automaton:
    """Grow a prefix-closed set of pairwise inconsistent access strings.

    Two strings are inconsistent when some suffix of an example, appended to
    each, gives two oppositely labeled examples.
    """
    sigma = sample_alphabet(sample, alphabet)
    suffixes = list(dict.fromkeys(e for w in sample.words for e in up_suffixes(w)))
    rows = {}

    def row(x):
        if x not in rows:
            rows[x] = {}
            for e in suffixes:
                label = sample.get(e.prepend(x))
                if label is not None:
                    rows[x][e] = label
        return rows[x]

    def agree(x, y):
        rx, ry = row(x), row(y)
        if len(ry) < len(rx):
            rx, ry = ry, rx
        return all(ry.get(e, label) == label for e, label in rx.items())

    found = [""]
    grown = True
    while grown:
        grown = False
        for s in sorted(found, key=sigma.key):
            for c in sigma:
                t = s + c
                if t not in found and not any(agree(t, y) for y in found):
                    found.append(t)
                    grown = True
                    break
            if grown:
                break
    order = sorted(found, key=sigma.key)
    members = set(order)
    trans = {}
    for s in order:
        for c in sigma:
            t = s + c
            # keep every state reachable by its own name when possible
            target = t if t in members else next(y for y in order if agree(t, y))
            trans[(s, c)] = {target}
    return Automaton(sigma, tuple(order), "", trans)


def _inf_sets(m: Automaton, sample: Sample) -> list:
    return [(run_inf(m, w), label, w) for w, label in sample]


def _fit_muller(m, sample):
    family = [c for c, label, _ in _inf_sets(m, sample) if label]
    return Acceptor(m, Muller(family))


def _fit_buchi(m, sample):
    bad = set().union(*(c for c, label, _ in _inf_sets(m, sample) if not label))
    return Acceptor(m, Buchi([q for q in m.states if q not in bad]))


def _fit_parity(m, sample):
    labels = {}
    for c, label, _ in _inf_sets(m, sample):
        if labels.setdefault(c, label) != label:
            return None
    colors = {q: 0 for q in m.states}

    def disjoint(sets):
        seen = set()
        for s in sets:
            if seen & s:
                return False
            seen |= s
        return True

    def place(node, color):
        kids = [d for d in labels if d < node and labels[d] != labels[node]]
        kids = [d for d in kids if not any(d < e for e in kids)]
        if not disjoint(kids) or node <= frozenset().union(*kids):
            return False
        for q in node.difference(*kids):
            colors[q] = color
        return all(place(d, color + 1) for d in kids)

    roots = [c for c in labels if not any(c < d for d in labels)]
    if not disjoint(roots):
        return None
    if not all(place(r, int(labels[r])) for r in roots):
        return None
    return Acceptor(m, Parity(colors))


def _fit_rabin(m, sample):
    acc = m.access_strings
    key = m.alphabet.key

    def set_key(s):
        return (len(s), tuple(sorted(key(acc[q]) for q in s)))

    def word_key(w):
        return (w.length, key(w.prefix), key(w.period))

    infs = _inf_sets(m, sample)
    negatives = [c for c, label, _ in infs if not label]
    reps = {}
    for c, label, w in infs:
        if label and (c not in reps or word_key(w) < word_key(reps[c])):
            reps[c] = w
    everything = frozenset(m.states)
    pairs = []
    for c in sorted(reps, key=set_key, reverse=True):
        if accepts(Acceptor(m, Rabin(pairs)), reps[c]):
            continue
        for q in sorted(c, key=m.position):
            if not any(q in d and d <= c for d in negatives):
                pairs.append(({q}, everything - c))
    return Acceptor(m, Rabin(pairs))


_FITS = {"buchi": _fit_buchi, "parity": _fit_parity, "rabin": _fit_rabin,
         "muller": _fit_muller}


def _learn_acc(kind, m, sample):
    hyp = _FITS[kind](m, sample)
    if hyp is not None and consistent(hyp, sample):
        return LearnerOutput(hyp, False)
    return LearnerOutput(default_acceptor(sample, kind, m.alphabet), True)


def learn_acc_ima(m: Automaton, sample: Sample) -> Acceptor:
    """Accept exactly the infinity sets of the positive examples."""
    return _learn_acc("muller", m, sample).acceptor


def learn_acc_iba(m: Automaton, sample: Sample) -> Acceptor:
    """Accept through every state no negative example visits infinitely often."""
    return _learn_acc("buchi", m, sample).acceptor


def learn_acc_ipa(m: Automaton, sample: Sample) -> Acceptor:
    """Color a forest of infinity sets whose labels alternate down each branch."""
    return _learn_acc("parity", m, sample).acceptor


def learn_acc_ira(m: Automaton, sample: Sample) -> Acceptor:
    """Add pairs for positive infinity sets, largest first, skipping those
    already accepted and pairs that some negative example satisfies."""
    return _learn_acc("rabin", m, sample).acceptor


def learn(sample: Sample, cls: str, alphabet=None) -> LearnerOutput:
    """Learn an acceptor of class ``cls`` (``ib``, ``ic``, ``ip``, ``ir``,
    ``is`` or ``im``) consistent with ``sample``."""
    kind = CLASSES.get(cls.lower())
    if kind is None:
        raise ValueError(f"unknown class {cls!r}")
    sigma = sample_alphabet(sample, alphabet)
    if kind in ("cobuchi", "streett"):
        dual = learn(sample.flipped(), "ib" if kind == "cobuchi" else "ir", sigma)
        return LearnerOutput(complement(dual.acceptor), dual.defaulted)
    m = learn_aut(sample, sigma)
    return _learn_acc(kind, m, sample)
