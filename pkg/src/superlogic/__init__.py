"""Boolean logic extended by a nilpotent element n with n^2 = 0."""

from .algebra import (
    CLASSICAL,
    N,
    ONE,
    ONE_N,
    VALUES,
    ZERO,
    SumSemantics,
    SuperValue,
    body,
    conj,
    diag,
    disj,
    formal_sum,
    leq,
    n_shift,
    neg,
    parse_value,
)
from .formula import (
    CanonicalPair,
    ParseError,
    TooManyAtoms,
    TruthTable,
    UnboundAtom,
    Verdict,
    canonicalize,
    equivalent,
    evaluate,
    parse,
    truth_table,
    unparse,
)
from .laws import check_identity, run_suite

__all__ = [
    "CLASSICAL", "N", "ONE", "ONE_N", "VALUES", "ZERO", "SumSemantics", "SuperValue",
    "body", "conj", "diag", "disj", "formal_sum", "leq", "n_shift", "neg", "parse_value",
    "CanonicalPair", "ParseError", "TooManyAtoms", "TruthTable", "UnboundAtom", "Verdict",
    "canonicalize", "equivalent", "evaluate", "parse", "truth_table", "unparse",
    "check_identity", "run_suite",
]
