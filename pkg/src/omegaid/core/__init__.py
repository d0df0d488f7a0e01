from .acceptor import (
    Acceptor,
    accepts,
    complement,
    complete,
    convert,
    isomorphic,
    lasso_accepts,
    nba_accepts,
    run_inf,
    size,
)
from .automaton import Automaton
from .conditions import CONDITIONS, Buchi, CoBuchi, Muller, Parity, Rabin, Streett
from .words import (
    Alphabet,
    InconsistentSample,
    Sample,
    UPWord,
    shortlex_cmp,
    up_canonicalize,
    up_equal,
    up_suffixes,
)

__all__ = [
    "Acceptor", "Alphabet", "Automaton", "Buchi", "CONDITIONS", "CoBuchi",
    "InconsistentSample", "Muller", "Parity", "Rabin", "Sample", "Streett", "UPWord",
    "accepts", "complement", "complete", "convert", "isomorphic", "lasso_accepts",
    "nba_accepts", "run_inf", "shortlex_cmp", "size", "up_canonicalize", "up_equal",
    "up_suffixes",
]
