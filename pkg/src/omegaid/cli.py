"""Command-line front end.

Exit status is 0 for a positive answer, 1 for a negative one (with a
witness word on stdout where there is one) and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import hardinstances
from .charsample import char_sample
from .congruence import is_ix, right_con, test_in_ix
from .core import Acceptor, UPWord, accepts
from .decide import equivalent, included
from .formats import (
    ParseError, acceptor_to_dot, parse_acceptor, parse_sample, serialize_acceptor,
    serialize_sample, state_names,
)
from .learner import learn
from .sccgraph import canonical_forest, min_states_forest


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None


def _load(path: str, complete: bool = True) -> Acceptor:
    a = parse_acceptor(_read(path))
    if not isinstance(a, Acceptor):
        raise UsageError(f"{path}: an 'acceptance:' line is required")
    if complete and not a.automaton.is_complete:
        print(f"warning: {path}: adding a sink state to complete the automaton",
              file=sys.stderr)
        a = a.completed
    return a


def _verdict(v, args, a1, a2, check) -> int:
    if args.oracle:
        from .oracle import brute_equivalent, brute_inclusion
        expected = brute_equivalent(a1, a2) if check == "equiv" else bool(brute_inclusion(a1, a2))
        if expected != bool(v):
            print("oracle disagrees with the decision procedure", file=sys.stderr)
    if v:
        print("yes")
        return 0
    print(v.witness)
    return 1


def cmd_accepts(args) -> int:
    a = _load(args.acceptor, complete=False)
    w = UPWord.parse(args.word)
    if not w.symbols() <= set(a.alphabet):
        raise UsageError("word uses symbols outside the alphabet")
    if a.automaton.is_deterministic:
        ok = accepts(a, w)
    else:
        from .core import lasso_accepts
        ok = lasso_accepts(a, w)
    print("yes" if ok else "no")
    return 0 if ok else 1


def cmd_include(args) -> int:
    a1, a2 = _load(args.left), _load(args.right)
    return _verdict(included(a1, a2), args, a1, a2, "include")


def cmd_equiv(args) -> int:
    a1, a2 = _load(args.left), _load(args.right)
    return _verdict(equivalent(a1, a2), args, a1, a2, "equiv")


def cmd_rightcon(args) -> int:
    a = _load(args.acceptor)
    rc = right_con(a)
    sys.stdout.write(serialize_acceptor(rc.automaton))
    src = state_names(a.automaton)
    dst = state_names(rc.automaton)
    for q, c in rc.mapping.items():
        print(f"# {src[q]} -> {dst[c]}")
    return 0


def cmd_is_ix(args) -> int:
    ok = is_ix(_load(args.acceptor))
    print("yes" if ok else "no")
    return 0 if ok else 1


def cmd_test_in_ix(args) -> int:
    found = test_in_ix(_load(args.acceptor))
    if found is None:
        print("no")
        return 1
    sys.stdout.write(serialize_acceptor(found))
    return 0


def cmd_charsample(args) -> int:
    sys.stdout.write(serialize_sample(char_sample(_load(args.acceptor)).combined))
    return 0


def cmd_learn(args) -> int:
    sample = parse_sample(_read(args.sample))
    out = learn(sample, args.type, args.alphabet)
    if out.defaulted:
        print("warning: sample fits no acceptor on the learned automaton; "
              "returning the prefix-tree acceptor", file=sys.stderr)
    sys.stdout.write(serialize_acceptor(out.acceptor))
    return 0


def cmd_gen_hard(args) -> int:
    acceptor = hardinstances.variants(args.bound)[args.variant]
    rows = hardinstances.demo_blowup(args.bound)
    if args.csv:
        sys.stdout.write(hardinstances.format_csv(rows))
        return 0
    sys.stdout.write(serialize_acceptor(acceptor))
    print()
    print(hardinstances.format_table(rows))
    return 0


def cmd_to_dot(args) -> int:
    sys.stdout.write(acceptor_to_dot(_load(args.acceptor, complete=False)))
    return 0


def cmd_forest(args) -> int:
    a = _load(args.acceptor)
    forest = min_states_forest(a) if args.min else canonical_forest(a)
    names = state_names(a.automaton)
    text = forest.to_dot(names.__getitem__) if args.dot else forest.outline(names.__getitem__)
    print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omegaid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, *files):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f, help="acceptor file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    sp = add("accepts", cmd_accepts, "test whether an acceptor accepts a word", "acceptor")
    sp.add_argument("word", help="word such as ab(ba)")
    for name, func, help in (("include", cmd_include, "language inclusion"),
                             ("equiv", cmd_equiv, "language equivalence")):
        sp = add(name, func, help, "left", "right")
        sp.add_argument("--oracle", action="store_true",
                        help="cross-check against the brute-force procedure")
    add("rightcon", cmd_rightcon, "print the right-congruence automaton", "acceptor")
    add("is-ix", cmd_is_ix, "test whether the automaton is its right-congruence automaton",
        "acceptor")
    add("test-in-ix", cmd_test_in_ix,
        "find an equivalent acceptor on the right-congruence automaton", "acceptor")
    add("charsample", cmd_charsample, "print a characteristic sample", "acceptor")
    sp = add("learn", cmd_learn, "learn an acceptor from a sample")
    sp.add_argument("sample", nargs="?", default="-", help="sample file, default stdin")
    sp.add_argument("--type", required=True, choices=["ib", "ic", "ip", "ir", "is", "im"])
    sp.add_argument("--alphabet", help="symbols, e.g. ab (default: those in the sample)")
    sp = add("gen-hard", cmd_gen_hard, "print the hard instance and its size table")
    sp.add_argument("--bound", type=int, default=5)
    sp.add_argument("--variant", default="buchi",
                    choices=["buchi", "cobuchi", "parity", "rabin", "muller"])
    sp.add_argument("--csv", action="store_true", help="print only the table, as CSV")
    add("to-dot", cmd_to_dot, "render an acceptor in Graphviz DOT", "acceptor")
    sp = add("forest", cmd_forest, "print the SCC forest of a parity acceptor", "acceptor")
    sp.add_argument("--min", action="store_true", help="the forest before merging")
    sp.add_argument("--dot", action="store_true", help="render as DOT")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
