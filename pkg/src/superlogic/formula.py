"""Formulas over named atoms: parsing, printing, evaluation, canonical form.

Grammar (ASCII, ``¬ ∧ ∨`` accepted as aliases)::

    formula := clause ('+' clause)*
    clause  := term ('|' term)*
    term    := factor ('&' factor)*
    factor  := '!' factor | 'n' '(' formula ')' | '(' formula ')'
             | '0' | '1' | 'n' | atom

Binary operators associate to the left. A bare ``n`` is the constant, ``n(...)``
is multiplication by n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence, Union

from .algebra import (
    N,
    ONE,
    ONE_N,
    VALUES,
    ZERO,
    SumSemantics,
    SuperValue,
    conj,
    disj,
    formal_sum,
    n_shift,
    neg,
    parse_value,
)

MAX_ATOMS = 8
ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED = "n"

GRAMMAR = """\
formula := clause ('+' clause)*
clause  := term ('|' term)*
term    := factor ('&' factor)*
factor  := '!' factor | 'n' '(' formula ')' | '(' formula ')' | '0' | '1' | 'n' | atom
atom    := [A-Za-z_][A-Za-z0-9_]*   (but not 'n')
precedence: ! > & > | > +    aliases: ¬ ∧ ∨"""


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


class ReservedWordError(ValueError):
    pass


class UnboundAtom(LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"atom {name!r} has no assigned value")


class TooManyAtoms(ValueError):
    def __init__(self, count: int, limit: int = MAX_ATOMS):
        self.count = count
        super().__init__(f"{count} atoms exceeds the exhaustive-check cap of {limit}")


# ---------------------------------------------------------------- AST


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return unparse(self)


@dataclass(frozen=True)
class Const(Formula):
    value: SuperValue


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if self.name == RESERVED:
            raise ReservedWordError("'n' is reserved for the nilpotent constant and cannot name an atom")
        if not ATOM_RE.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Sum(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class NShift(Formula):
    arg: Formula


FALSE = Const(ZERO)
TRUE = Const(ONE)

FormulaLike = Union[Formula, str]


def as_formula(f: FormulaLike) -> Formula:
    return parse(f) if isinstance(f, str) else f


def atoms(f: Formula) -> list[str]:
    """Sorted atom names occurring in ``f``."""
    found: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            found.add(node.name)
        elif isinstance(node, (Not, NShift)):
            stack.append(node.arg)
        elif isinstance(node, (And, Or, Sum)):
            stack.extend((node.left, node.right))
    return sorted(found)


def is_pure(f: Formula) -> bool:
    """True when ``f`` has no Sum, no NShift and no constant carrying a soul."""
    if isinstance(f, Const):
        return f.value.soul == 0
    if isinstance(f, Atom):
        return True
    if isinstance(f, Not):
        return is_pure(f.arg)
    if isinstance(f, (And, Or)):
        return is_pure(f.left) and is_pure(f.right)
    return False


# ---------------------------------------------------------------- parsing

_ALIASES = {"¬": "!", "∧": "&", "∨": "|"}
_PUNCT = set("+|&!()")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass
class _Token:
    kind: str  # "op", "ident", "const", "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    byte_at = [0]
    for ch in text:
        byte_at.append(byte_at[-1] + len(ch.encode()))
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(_Token("ident", m.group(), byte_at[i]))
            i = m.end()
            continue
        if ch in "01":
            tokens.append(_Token("const", ch, byte_at[i]))
        elif _ALIASES.get(ch, ch) in _PUNCT:
            tokens.append(_Token("op", _ALIASES.get(ch, ch), byte_at[i]))
        else:
            raise ParseError(f"unexpected character {ch!r}", byte_at[i], _FACTOR_START)
        i += 1
    tokens.append(_Token("end", "", byte_at[-1]))
    return tokens


_FACTOR_START = frozenset({"!", "(", "0", "1", "n", "<atom>"})


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, op: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text == op

    def expect(self, op: str) -> None:
        if not self.at(op):
            tok = self.peek()
            found = tok.text or "end of input"
            raise ParseError(f"unexpected {found!r}", tok.offset, {op})
        self.take()

    def formula(self) -> Formula:
        node = self.clause()
        while self.at("+"):
            self.take()
            node = Sum(node, self.clause())
        return node

    def clause(self) -> Formula:
        node = self.term()
        while self.at("|"):
            self.take()
            node = Or(node, self.term())
        return node

    def term(self) -> Formula:
        node = self.factor()
        while self.at("&"):
            self.take()
            node = And(node, self.factor())
        return node

    def factor(self) -> Formula:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "!":
            self.take()
            return Not(self.factor())
        if tok.kind == "op" and tok.text == "(":
            self.take()
            node = self.formula()
            self.expect(")")
            return node
        if tok.kind == "const":
            self.take()
            return Const(ONE if tok.text == "1" else ZERO)
        if tok.kind == "ident":
            self.take()
            if tok.text == RESERVED:
                if self.at("("):
                    self.take()
                    node = self.formula()
                    self.expect(")")
                    return NShift(node)
                return Const(N)
            return Atom(tok.text)
        found = tok.text or "end of input"
        raise ParseError(f"unexpected {found!r}", tok.offset, _FACTOR_START)


def parse(text: str) -> Formula:
    parser = _Parser(text)
    node = parser.formula()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.text!r}", tok.offset, {"+", "|", "&", "<end>"})
    return node


# ---------------------------------------------------------------- printing

_PREC = {Sum: 0, Or: 1, And: 2}
_SYMBOL = {Sum: "+", Or: "|", And: "&"}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 3)


def unparse(f: Formula) -> str:
    """Render ``f`` in the ASCII grammar with minimal parentheses.

    ``Const(1+n)`` has no single-token spelling and prints as ``(1 + n)``.
    """
    if isinstance(f, Const):
        return "(1 + n)" if f.value == ONE_N else str(f.value)
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        inner = unparse(f.arg)
        return "!" + (inner if _prec(f.arg) == 3 else f"({inner})")
    if isinstance(f, NShift):
        return f"n({unparse(f.arg)})"
    prec = _PREC[type(f)]
    left = unparse(f.left)
    right = unparse(f.right)
    if _prec(f.left) < prec:
        left = f"({left})"
    if _prec(f.right) <= prec:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


# ---------------------------------------------------------------- evaluation

Valuation = Mapping[str, SuperValue]


def evaluate(f: FormulaLike, val: Valuation, sem: SumSemantics = SumSemantics.XOR) -> SuperValue:
    f = as_formula(f)
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Atom):
        try:
            return val[f.name]
        except KeyError:
            raise UnboundAtom(f.name) from None
    if isinstance(f, Not):
        return neg(evaluate(f.arg, val, sem))
    if isinstance(f, NShift):
        return n_shift(evaluate(f.arg, val, sem))
    left = evaluate(f.left, val, sem)
    right = evaluate(f.right, val, sem)
    if isinstance(f, And):
        return conj(left, right, sem)
    if isinstance(f, Or):
        return disj(left, right, sem)
    return formal_sum(left, right, sem)


def compile_formula(f: Formula, names: Sequence[str], sem: SumSemantics) -> Callable[[Sequence[SuperValue]], SuperValue]:
    """Close ``f`` over positional atom values, for exhaustive loops."""
    index = {name: i for i, name in enumerate(names)}

    def build(node: Formula):
        if isinstance(node, Const):
            value = node.value
            return lambda row: value
        if isinstance(node, Atom):
            if node.name not in index:
                raise UnboundAtom(node.name)
            i = index[node.name]
            return lambda row: row[i]
        if isinstance(node, Not):
            arg = build(node.arg)
            return lambda row: neg(arg(row))
        if isinstance(node, NShift):
            arg = build(node.arg)
            return lambda row: n_shift(arg(row))
        left, right = build(node.left), build(node.right)
        op = {And: conj, Or: disj, Sum: formal_sum}[type(node)]
        return lambda row: op(left(row), right(row), sem)

    return build(f)


def evaluate_classical(f: Formula, bits: Mapping[str, int], sem: SumSemantics = SumSemantics.XOR) -> int:
    """Plain Boolean evaluation of an n-free formula.

    ``Sum`` is read as the same-grade plus of ``sem`` on bits.
    """
    if isinstance(f, Const):
        if f.value.soul:
            raise ValueError("classical evaluation of a formula containing n")
        return f.value.body
    if isinstance(f, Atom):
        try:
            return bits[f.name]
        except KeyError:
            raise UnboundAtom(f.name) from None
    if isinstance(f, Not):
        return 1 - evaluate_classical(f.arg, bits, sem)
    if isinstance(f, NShift):
        raise ValueError("classical evaluation of a formula containing n")
    left = evaluate_classical(f.left, bits, sem)
    right = evaluate_classical(f.right, bits, sem)
    if isinstance(f, And):
        return left & right
    if isinstance(f, Or):
        return left | right
    return sem.plus(left, right)


def truth_vector(f: Formula, names: Sequence[str], sem: SumSemantics = SumSemantics.XOR) -> int:
    """Classical truth table of an n-free formula packed into an int.

    Bit ``r`` holds the value at row ``r`` of ``product((0, 1), repeat=len(names))``,
    first name most significant. Shared subterms are evaluated once, which
    matters for canonical forms built under xor.
    """
    m = len(names)
    rows = 1 << m
    full = (1 << rows) - 1
    position = {name: m - 1 - i for i, name in enumerate(names)}
    memo: dict[int, int] = {}

    def atom_mask(shift: int) -> int:
        return sum(1 << r for r in range(rows) if (r >> shift) & 1)

    def go(node: Formula) -> int:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Const):
            if node.value.soul:
                raise ValueError("classical evaluation of a formula containing n")
            out = full if node.value.body else 0
        elif isinstance(node, Atom):
            if node.name not in position:
                raise UnboundAtom(node.name)
            out = atom_mask(position[node.name])
        elif isinstance(node, Not):
            out = full ^ go(node.arg)
        elif isinstance(node, NShift):
            raise ValueError("classical evaluation of a formula containing n")
        else:
            a, b = go(node.left), go(node.right)
            if isinstance(node, And):
                out = a & b
            elif isinstance(node, Or):
                out = a | b
            else:
                out = a ^ b if sem is SumSemantics.XOR else a | b
        memo[key] = out
        return out

    return go(f)


def body_project(f: Formula) -> Formula:
    """Set n := 0 throughout ``f``."""
    if isinstance(f, Const):
        return TRUE if f.value.body else FALSE
    if isinstance(f, Atom):
        return f
    if isinstance(f, NShift):
        return FALSE
    if isinstance(f, Not):
        return Not(body_project(f.arg))
    return type(f)(body_project(f.left), body_project(f.right))


# ---------------------------------------------------------------- canonical form


@dataclass(frozen=True)
class CanonicalPair:
    """``p + n*q`` with ``p`` and ``q`` pure Boolean formulas."""

    p: Formula
    q: Formula

    def __str__(self) -> str:
        return f"{unparse(self.p)} + n({unparse(self.q)})"

    def evaluate(self, bits: Mapping[str, int]) -> SuperValue:
        """Evaluate both parts classically and reassemble ``p + n*q``."""
        return SuperValue.of(evaluate_classical(self.p, bits), evaluate_classical(self.q, bits))


def _not(a: Formula) -> Formula:
    if a == FALSE:
        return TRUE
    if a == TRUE:
        return FALSE
    if isinstance(a, Not):
        return a.arg
    return Not(a)


def _and(a: Formula, b: Formula) -> Formula:
    if a == FALSE or b == FALSE:
        return FALSE
    if a == TRUE:
        return b
    if b == TRUE:
        return a
    return And(a, b)


def _or(a: Formula, b: Formula) -> Formula:
    if a == TRUE or b == TRUE:
        return TRUE
    if a == FALSE:
        return b
    if b == FALSE:
        return a
    return Or(a, b)


def _xor(a: Formula, b: Formula) -> Formula:
    if a == FALSE:
        return b
    if b == FALSE:
        return a
    if a == TRUE:
        return _not(b)
    if b == TRUE:
        return _not(a)
    return Or(And(a, _not(b)), And(_not(a), b))


def soul_atom(name: str) -> str:
    return f"{name}_soul"


def canonicalize(f: FormulaLike, sem: SumSemantics = SumSemantics.XOR, split_atoms: bool = False) -> CanonicalPair:
    """Rewrite ``f`` into ``p + n*q`` form.

    By default atoms are classical propositions, ``a -> (a, 0)``, which is how
    ``P + n(Q)`` is meant to be read. With ``split_atoms`` every atom ``a``
    becomes ``a + n(a_soul)`` first, so the pair is sound for atoms taking
    any of the four values.
    """
    f = as_formula(f)
    plus = _xor if sem is SumSemantics.XOR else _or
    names = set(atoms(f))
    if split_atoms:
        clashes = sorted(n for n in names if soul_atom(n) in names)
        if clashes:
            raise ValueError(f"atom names collide with generated soul atoms: {clashes}")

    def go(node: Formula) -> tuple[Formula, Formula]:
        if isinstance(node, Const):
            return (TRUE if node.value.body else FALSE, TRUE if node.value.soul else FALSE)
        if isinstance(node, Atom):
            return (node, Atom(soul_atom(node.name)) if split_atoms else FALSE)
        if isinstance(node, Not):
            p, q = go(node.arg)
            return _not(p), _not(q)
        if isinstance(node, NShift):
            p, _ = go(node.arg)
            return FALSE, p
        p, q = go(node.left)
        p2, q2 = go(node.right)
        if isinstance(node, And):
            return _and(p, p2), plus(_and(p, q2), _and(q, p2))
        if isinstance(node, Or):
            return _or(p, p2), plus(_or(p, q2), _or(q, p2))
        return plus(p, p2), plus(q, q2)

    return CanonicalPair(*go(f))


# ---------------------------------------------------------------- tables and equivalence


@dataclass(frozen=True)
class TruthTable:
    atoms: tuple[str, ...]
    semantics: SumSemantics
    rows: tuple[tuple[tuple[SuperValue, ...], SuperValue], ...]

    def to_json(self) -> dict:
        return {
            "atoms": list(self.atoms),
            "semantics": self.semantics.value,
            "rows": [{"in": [str(v) for v in ins], "out": str(out)} for ins, out in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruthTable":
        rows = tuple(
            (tuple(parse_value(v) for v in row["in"]), parse_value(row["out"])) for row in data["rows"]
        )
        return cls(tuple(data["atoms"]), SumSemantics(data["semantics"]), rows)


def _check_cap(names: Sequence[str]) -> None:
    if len(names) > MAX_ATOMS:
        raise TooManyAtoms(len(names))


def truth_table(
    f: FormulaLike,
    sem: SumSemantics = SumSemantics.XOR,
    domain: Sequence[SuperValue] = VALUES,
) -> TruthTable:
    f = as_formula(f)
    names = atoms(f)
    _check_cap(names)
    fn = compile_formula(f, names, sem)
    rows = tuple((row, fn(row)) for row in product(domain, repeat=len(names)))
    return TruthTable(tuple(names), sem, rows)


@dataclass(frozen=True)
class Verdict:
    identity_name: str
    semantics: SumSemantics
    holds: bool
    witness: dict[str, SuperValue] | None = None
    lhs_value: SuperValue | None = None
    rhs_value: SuperValue | None = None
    section: str = field(default="", compare=False)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a verdict has a witness exactly when it fails")

    def to_json(self) -> dict:
        out = {"name": self.identity_name, "holds": self.holds}
        if self.section:
            out["section"] = self.section
        out["witness"] = None if self.witness is None else {k: str(v) for k, v in self.witness.items()}
        if not self.holds:
            out["lhs"] = str(self.lhs_value)
            out["rhs"] = str(self.rhs_value)
        return out


def equivalent(
    f: FormulaLike,
    g: FormulaLike,
    sem: SumSemantics = SumSemantics.XOR,
    domain: Sequence[SuperValue] = VALUES,
    name: str = "",
) -> Verdict:
    """Compare ``f`` and ``g`` on every valuation over their joint atoms.

    ``domain`` restricts the values each atom ranges over; pass
    :data:`~superlogic.algebra.CLASSICAL` when atoms stand for the classical
    components of a superlogic element. The witness is the first disagreeing
    row in table order.
    """
    f, g = as_formula(f), as_formula(g)
    names = sorted(set(atoms(f)) | set(atoms(g)))
    _check_cap(names)
    name = name or f"{unparse(f)} == {unparse(g)}"
    ff = compile_formula(f, names, sem)
    gg = compile_formula(g, names, sem)
    for row in product(domain, repeat=len(names)):
        lhs, rhs = ff(row), gg(row)
        if lhs != rhs:
            return Verdict(name, sem, False, dict(zip(names, row)), lhs, rhs)
    return Verdict(name, sem, True)
