"""Text formats for acceptors and samples, and DOT rendering.

Acceptor files are line based; ``#`` starts a comment::

    alphabet: a b
    states: s0 s1
    initial: s0
    acceptance: buchi s1
    trans: s0 a s1
    trans: s0 b s0
    trans: s1 a s1
    trans: s1 b s1

Other acceptance lines: ``cobuchi s0``, ``parity s0=2 s1=1``,
``rabin (s1|s0) (s2|)``, ``streett (s1|s0)``, ``muller {s1} {s0 s1}``.
A line ``deterministic: no`` allows several targets per state and symbol.
Without an ``acceptance:`` line the file describes a bare automaton.
"""

from __future__ import annotations

import re

from .core import (
    Acceptor, Alphabet, Automaton, Buchi, CoBuchi, Muller, Parity, Rabin, Sample, Streett,
    UPWord,
)

_TOKEN = re.compile(r"^[^\s()|{}=#]+$")
_PAIR = re.compile(r"\(([^()|]*)\|([^()|]*)\)")
_SET = re.compile(r"\{([^{}]*)\}")
_COLOR = re.compile(r"^([^\s=]+)=(\d+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _strip_comment(text: str) -> str:
    return text.split("#", 1)[0].rstrip()


def parse_acceptor(text: str):
    """Parse an acceptor file; returns an ``Automaton`` when there is no
    ``acceptance:`` line."""
    fields = {}
    trans_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        head, sep, body = line.partition(":")
        key = head.strip()
        if not sep:
            raise ParseError("expected 'key: value'", lineno, len(raw) - len(raw.lstrip()) + 1)
        col = len(head) + 2 + (len(body) - len(body.lstrip()))
        if key == "trans":
            trans_lines.append((lineno, col, body.split()))
        elif key in ("alphabet", "states", "initial", "acceptance", "deterministic"):
            if key in fields:
                raise ParseError(f"repeated '{key}' line", lineno)
            fields[key] = (lineno, col, body.strip())
        else:
            raise ParseError(f"unknown key '{key}'", lineno)
    for key in ("alphabet", "states", "initial"):
        if key not in fields:
            raise ParseError(f"missing '{key}' line", len(text.splitlines()) + 1)

    lineno, col, body = fields["alphabet"]
    try:
        sigma = Alphabet.of(body.split())
    except ValueError as err:
        raise ParseError(str(err), lineno, col) from None
    lineno, col, body = fields["states"]
    states = body.split()
    if not states or len(set(states)) != len(states):
        raise ParseError("states must be a non-empty list without repeats", lineno, col)
    known = set(states)

    def state(name, lineno, col):
        if name not in known:
            raise ParseError(f"unknown state '{name}'", lineno, col)
        return name

    lineno, col, body = fields["initial"]
    initial = state(body, lineno, col)
    deterministic = True
    if "deterministic" in fields:
        lineno, col, body = fields["deterministic"]
        if body not in ("yes", "no"):
            raise ParseError("expected 'yes' or 'no'", lineno, col)
        deterministic = body == "yes"

    trans = {}
    for lineno, col, parts in trans_lines:
        if len(parts) != 3:
            raise ParseError("expected 'trans: source symbol target'", lineno, col)
        src, sym, dst = parts
        state(src, lineno, col)
        state(dst, lineno, col)
        if sym not in sigma:
            raise ParseError(f"unknown symbol '{sym}'", lineno, col)
        targets = trans.setdefault((src, sym), set())
        if deterministic and targets:
            raise ParseError("nondeterministic transition", lineno, col)
        targets.add(dst)
    m = Automaton(sigma, tuple(states), initial, trans)
    if "acceptance" not in fields:
        return m
    lineno, col, body = fields["acceptance"]
    return Acceptor(m, _parse_condition(body, lineno, col, state, states))


def _names(text, lineno, col, state):
    return [state(n, lineno, col) for n in text.split()]


def _parse_condition(body, lineno, col, state, states):
    kind, _, rest = body.partition(" ")
    rest = rest.strip()
    if kind in ("buchi", "cobuchi"):
        names = _names(rest, lineno, col, state)
        return Buchi(names) if kind == "buchi" else CoBuchi(names)
    if kind == "parity":
        colors = {}
        for tok in rest.split():
            m = _COLOR.match(tok)
            if not m:
                raise ParseError(f"expected state=color, got '{tok}'", lineno, col)
            colors[state(m.group(1), lineno, col)] = int(m.group(2))
        missing = [q for q in states if q not in colors]
        if missing:
            raise ParseError(f"no color for state '{missing[0]}'", lineno, col)
        return Parity(colors)
    if kind in ("rabin", "streett"):
        if _PAIR.sub("", rest).strip():
            raise ParseError("expected pairs of the form (G|B)", lineno, col)
        pairs = [(_names(g, lineno, col, state), _names(b, lineno, col, state))
                 for g, b in _PAIR.findall(rest)]
        return Rabin(pairs) if kind == "rabin" else Streett(pairs)
    if kind == "muller":
        if _SET.sub("", rest).strip():
            raise ParseError("expected sets of the form {q ...}", lineno, col)
        return Muller([_names(s, lineno, col, state) for s in _SET.findall(rest)])
    raise ParseError(f"unknown acceptance '{kind}'", lineno, col)


def state_names(m: Automaton) -> dict:
    """Printable names: states are kept when they are plain tokens, strings
    are otherwise bracketed, and anything else is numbered."""
    if all(isinstance(q, str) and _TOKEN.match(q) for q in m.states):
        return {q: q for q in m.states}
    if all(isinstance(q, str) and _TOKEN.match(f"[{q}]") for q in m.states):
        return {q: f"[{q}]" for q in m.states}
    return {q: f"q{i}" for i, q in enumerate(m.states)}


def _condition_text(c, name, order) -> str:
    def names(s):
        return " ".join(name[q] for q in sorted(s, key=order))

    if isinstance(c, Buchi):
        return f"buchi {names(c.accepting)}".rstrip()
    if isinstance(c, CoBuchi):
        return f"cobuchi {names(c.rejecting)}".rstrip()
    if isinstance(c, Parity):
        items = sorted(c.colors.items(), key=lambda kv: order(kv[0]))
        return "parity " + " ".join(f"{name[q]}={v}" for q, v in items)
    if isinstance(c, (Rabin, Streett)):
        body = " ".join(f"({names(g)}|{names(b)})" for g, b in c.pairs)
        return f"{c.kind} {body}".rstrip()
    body = " ".join("{" + names(s) + "}" for s in c.family)
    return f"muller {body}".rstrip()


def serialize_acceptor(a) -> str:
    """Canonical text of an acceptor or a bare automaton."""
    m = a.automaton if isinstance(a, Acceptor) else a
    name = state_names(m)
    lines = [
        "alphabet: " + " ".join(m.alphabet),
        "states: " + " ".join(name[q] for q in m.states),
        "initial: " + name[m.initial],
    ]
    if not m.is_deterministic:
        lines.append("deterministic: no")
    if isinstance(a, Acceptor):
        lines.append("acceptance: " + _condition_text(a.condition, name, m.position))
    for q in m.states:
        for s in m.alphabet:
            for t in sorted(m.successors(q, s), key=m.position):
                lines.append(f"trans: {name[q]} {s} {name[t]}")
    return "\n".join(lines) + "\n"


def parse_sample(text: str) -> Sample:
    sample = Sample()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2 or parts[1] not in ("0", "1"):
            raise ParseError("expected 'word<TAB>0|1'", lineno)
        try:
            sample.add(UPWord.parse(parts[0]), parts[1] == "1")
        except ValueError as err:
            raise ParseError(str(err), lineno) from None
    return sample


def serialize_sample(sample: Sample) -> str:
    return "".join(f"{w}\t{int(label)}\n" for w, label in sample)


def acceptor_to_dot(a) -> str:
    """Graphviz rendering; accepting information is shown in node labels."""
    m = a.automaton if isinstance(a, Acceptor) else a
    name = state_names(m)
    c = a.condition if isinstance(a, Acceptor) else None
    lines = ["digraph acceptor {", "  rankdir=LR;", '  start [shape=point];']
    for q in m.states:
        label = name[q]
        shape = "circle"
        if isinstance(c, Buchi) and q in c.accepting:
            shape = "doublecircle"
        elif isinstance(c, CoBuchi) and q in c.rejecting:
            label += " (avoid)"
        elif isinstance(c, Parity):
            label += f" : {c.color(q)}"
        elif isinstance(c, (Rabin, Streett)):
            tags = [f"G{i}" for i, (g, _) in enumerate(c.pairs) if q in g]
            tags += [f"B{i}" for i, (_, b) in enumerate(c.pairs) if q in b]
            if tags:
                label += " " + ",".join(tags)
        lines.append(f'  "{name[q]}" [shape={shape}, label="{label}"];')
    if isinstance(c, Muller):
        sets = "; ".join("{" + " ".join(name[q] for q in s) + "}" for s in c.family)
        lines.append(f'  label="muller: {sets}";')
    lines.append(f'  start -> "{name[m.initial]}";')
    for q in m.states:
        for s in m.alphabet:
            for t in sorted(m.successors(q, s), key=m.position):
                lines.append(f'  "{name[q]}" -> "{name[t]}" [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
