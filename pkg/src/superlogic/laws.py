"""Named identity suite, checked exhaustively per sum semantics.

Three sections:

``laws``
    Familiar Boolean identities tested on all four values per atom.
``expansions``
    The multi-term expansions of conjunction, disjunction and the two
    distributivity computations, tested against direct evaluation. Their atoms
    stand for the classical parts ``P`` and ``Q`` of ``L = P + n(Q)``, so they
    range over ``{0, 1}``; that is one row per superlogic value of each ``L``.
``classical-limit``
    Every law, the conjunction/disjunction expansions and the two stated
    n = 0 equalities after setting n := 0, compared as Boolean functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Sequence

from .algebra import CLASSICAL, VALUES, SumSemantics, SuperValue
from .formula import (
    Formula,
    FormulaLike,
    Verdict,
    as_formula,
    atoms,
    body_project,
    equivalent,
    evaluate,
    evaluate_classical,
    parse,
    unparse,
)


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: Formula
    rhs: Formula
    classical_atoms: bool = False
    # when set, the rhs is body + n*soul with both parts evaluated classically
    rhs_soul: Formula | None = None


def _ident(name: str, lhs: str, rhs: str, classical_atoms: bool = False) -> Identity:
    return Identity(name, parse(lhs), parse(rhs), classical_atoms)


LAWS = (
    _ident("n-squared-zero", "n(x) & n(y)", "0"),
    _ident("n-shift-twice", "n(n(x))", "0"),
    _ident("double-negation", "!!x", "x"),
    _ident("and-commutative", "x & y", "y & x"),
    _ident("or-commutative", "x | y", "y | x"),
    _ident("and-associative", "(x & y) & z", "x & (y & z)"),
    _ident("or-associative", "(x | y) | z", "x | (y | z)"),
    _ident("and-idempotent", "x & x", "x"),
    _ident("or-idempotent", "x | x", "x"),
    _ident("distributivity-and-over-or", "x & (y | z)", "(x & y) | (x & z)"),
    _ident("distributivity-or-over-and", "x | (y & z)", "(x | y) & (x | z)"),
    _ident("de-morgan-and", "!(x & y)", "!x | !y"),
    _ident("de-morgan-or", "!(x | y)", "!x & !y"),
    _ident("excluded-middle", "x | !x", "1"),
    _ident("absorption-and", "x & (x | y)", "x"),
    _ident("absorption-or", "x | (x & y)", "x"),
)

_L1, _L2, _L3 = "(P1 + n(Q1))", "(P2 + n(Q2))", "(P3 + n(Q3))"


def _expansion(name: str, lhs: str, body: str, soul: str) -> Identity:
    return Identity(name, parse(lhs), parse(body), True, parse(soul))


EXPANSIONS = (
    _expansion("conjunction-expansion", f"{_L1} & {_L2}", "P1 & P2", "P1 & Q2 + Q1 & P2"),
    _expansion("disjunction-expansion", f"{_L1} | {_L2}", "P1 | P2", "P1 | Q2 + Q1 | P2"),
    _ident(
        "distributivity-I-expansion",
        f"{_L1} | ({_L2} & {_L3})",
        "(P1 | (P2 & P3)) + (P1 | (P2 & n(Q3))) + (P1 | (n(Q2) & P3)) + (n(Q1) | (P2 & P3))",
        True,
    ),
    _ident(
        "distributivity-II-expansion",
        f"({_L1} | {_L2}) & {_L3}",
        "((P1 | P2) & P3) + ((P1 | P2) & n(Q3)) + ((P1 | n(Q2)) & P3) + (n(Q1 | P2) & P3)",
        True,
    ),
)

# The four-term distributivity expansions keep bodies such as P1 | (P2 & 0)
# after n := 0, so they are not Boolean identities there; the limit section
# uses the stated n = 0 equalities instead.
CLASSICAL_LIMIT = LAWS + EXPANSIONS[:2] + (
    _ident("distributivity-I-at-n-zero", f"{_L1} | ({_L2} & {_L3})", "P1 | (P2 & P3)", True),
    _ident("distributivity-II-at-n-zero", f"({_L1} | {_L2}) & {_L3}", "(P1 | P2) & P3", True),
)


def check_identity(
    lhs: FormulaLike,
    rhs: FormulaLike,
    sem: SumSemantics = SumSemantics.XOR,
    name: str = "",
    classical_atoms: bool = False,
) -> Verdict:
    domain = CLASSICAL if classical_atoms else VALUES
    return equivalent(lhs, rhs, sem, domain=domain, name=name)


def check_expansion(
    lhs: FormulaLike,
    rhs_body: FormulaLike,
    rhs_soul: FormulaLike,
    sem: SumSemantics = SumSemantics.XOR,
    name: str = "",
) -> Verdict:
    """Compare ``lhs`` on classical atoms with the pair ``rhs_body + n*rhs_soul``.

    The two parts are n-free and evaluated as plain Boolean formulas, with
    ``+`` read per ``sem``.
    """
    lhs, rhs_body, rhs_soul = as_formula(lhs), as_formula(rhs_body), as_formula(rhs_soul)
    names = sorted(set(atoms(lhs)) | set(atoms(rhs_body)) | set(atoms(rhs_soul)))
    name = name or f"{unparse(lhs)} == {unparse(rhs_body)} + n({unparse(rhs_soul)})"
    for bits in product((0, 1), repeat=len(names)):
        row = dict(zip(names, bits))
        val = {k: SuperValue.of(v, 0) for k, v in row.items()}
        a = evaluate(lhs, val, sem)
        b = SuperValue.of(evaluate_classical(rhs_body, row, sem), evaluate_classical(rhs_soul, row, sem))
        if a != b:
            return Verdict(name, sem, False, val, a, b)
    return Verdict(name, sem, True)


def check_classical_limit(
    lhs: FormulaLike,
    rhs: FormulaLike,
    sem: SumSemantics = SumSemantics.XOR,
    name: str = "",
) -> Verdict:
    """Compare both sides as Boolean functions after setting n := 0."""
    lhs, rhs = body_project(as_formula(lhs)), body_project(as_formula(rhs))
    names = sorted(set(atoms(lhs)) | set(atoms(rhs)))
    name = name or f"{unparse(lhs)} == {unparse(rhs)}"
    for bits in product((0, 1), repeat=len(names)):
        row = dict(zip(names, bits))
        a = evaluate_classical(lhs, row, sem)
        b = evaluate_classical(rhs, row, sem)
        if a != b:
            witness = {k: SuperValue.of(v, 0) for k, v in row.items()}
            return Verdict(name, sem, False, witness, SuperValue.of(a, 0), SuperValue.of(b, 0))
    return Verdict(name, sem, True)


@dataclass(frozen=True)
class LawSuiteReport:
    semantics: SumSemantics
    entries: tuple[Verdict, ...]
    carrier_size: int = 4

    def failures(self, section: str | None = None) -> list[str]:
        return [v.identity_name for v in self.entries if not v.holds and section in (None, v.section)]

    def section(self, name: str) -> list[Verdict]:
        return [v for v in self.entries if v.section == name]

    def to_json(self) -> dict:
        return {
            "semantics": self.semantics.value,
            "carrier_size": self.carrier_size,
            "results": [v.to_json() for v in self.entries],
        }


def run_suite(sem: SumSemantics = SumSemantics.XOR) -> LawSuiteReport:
    entries = []
    for ident in LAWS + EXPANSIONS:
        if ident.rhs_soul is not None:
            verdict = check_expansion(ident.lhs, ident.rhs, ident.rhs_soul, sem, ident.name)
        else:
            verdict = check_identity(ident.lhs, ident.rhs, sem, ident.name, ident.classical_atoms)
        entries.append(_in_section(verdict, "laws" if ident in LAWS else "expansions"))
    for ident in CLASSICAL_LIMIT:
        verdict = check_classical_limit(ident.lhs, ident.rhs, sem, ident.name)
        entries.append(_in_section(verdict, "classical-limit"))
    return LawSuiteReport(sem, tuple(entries))


def _in_section(v: Verdict, section: str) -> Verdict:
    return Verdict(v.identity_name, v.semantics, v.holds, v.witness, v.lhs_value, v.rhs_value, section)


def entry_key(v: Verdict) -> str:
    return f"{v.section}/{v.identity_name}"


def load_expectations(path: str | None = None) -> dict[str, list[str]]:
    """Expected failing entries (``section/name``) keyed by semantics."""
    if path is None:
        text = resources.files("superlogic").joinpath("data/law_expectations.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def matches_expectation(report: LawSuiteReport, expected: dict[str, Sequence[str]]) -> bool:
    failing = sorted(entry_key(v) for v in report.entries if not v.holds)
    return failing == sorted(expected.get(report.semantics.value, []))
