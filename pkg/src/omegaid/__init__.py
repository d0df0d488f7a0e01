"""Learning and deciding deterministic omega-automata on ultimately periodic words."""

from .core import (
    Acceptor, Alphabet, Automaton, Buchi, CoBuchi, Muller, Parity, Rabin, Sample, Streett,
    UPWord, accepts, complement, complete, convert, isomorphic, run_inf,
)

__version__ = "0.1.0"

__all__ = [
    "Acceptor", "Alphabet", "Automaton", "Buchi", "CoBuchi", "Muller", "Parity", "Rabin",
    "Sample", "Streett", "UPWord", "accepts", "complement", "complete", "convert",
    "isomorphic", "run_inf",
]
