"""Characters of the carrier, the algebra they generate, and its bar complex.

A character is a map chi: {0, 1, n, 1+n} -> {0, 1} with

    chi(P + nQ) = chi(P) + chi(nQ)
    chi(!L)     = 1 + chi(L)            (complement)
    chi(L | K)  = chi(L) + chi(K)
    chi(L & K)  = chi(L) chi(K)
    L <= K  implies  chi(L) <= chi(K)

where ``+`` on bits is exclusive-or or join (``char_sum``), independently of
the value-level sum semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

from .algebra import VALUES, SumSemantics, SuperValue, conj, disj, leq, neg
from .gf2 import CochainComplex, F2Matrix

MAX_BAR_DEGREE = 3
MAX_ALGEBRA_SIZE = 16


class DegreeTooLarge(ValueError):
    pass


class ClosureTooLarge(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Table:
    """A function from the carrier to F2, stored as values at (0, 1, n, 1+n)."""

    bits: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.bits) != 4 or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"a table needs four bits, got {self.bits!r}")

    def __call__(self, v: SuperValue) -> int:
        return self.bits[v.code]

    @classmethod
    def parse(cls, text: str) -> "Table":
        """Read four bits such as ``"0101"``, listed at 0, 1, n, 1+n."""
        text = text.strip()
        if len(text) != 4 or set(text) - {"0", "1"}:
            raise ValueError(f"table spec {text!r} must be four bits, e.g. 0101")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "Table":
        return cls(tuple(int(data[str(v)]) for v in VALUES))

    def to_json(self) -> dict[str, int]:
        return {str(v): self(v) for v in VALUES}

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


ZERO_TABLE = Table((0, 0, 0, 0))
UNIT_TABLE = Table((1, 1, 1, 1))
BODY_TABLE = Table(tuple(v.body for v in VALUES))


def mu(f: Table, g: Table) -> Table:
    """Pointwise product; the result is a function on the carrier, not necessarily a character."""
    return Table(tuple(a & b for a, b in zip(f.bits, g.bits)))


def table_sum(f: Table, g: Table) -> Table:
    return Table(tuple(a ^ b for a, b in zip(f.bits, g.bits)))


def delta_eps(chi: Table) -> tuple[tuple[Table, Table], int]:
    """Coproduct ``chi -> chi (x) chi`` and counit ``chi -> 1``."""
    return (chi, chi), 1


@dataclass(frozen=True)
class ClauseViolation:
    clause: str
    args: tuple[SuperValue, ...]
    expected: int
    actual: int

    def to_json(self) -> dict:
        return {"clause": self.clause, "args": [str(a) for a in self.args], "expected": self.expected, "actual": self.actual}


@dataclass(frozen=True)
class CharacterVerdict:
    table: Table
    semantics: SumSemantics
    char_sum: SumSemantics
    violations: tuple[ClauseViolation, ...]

    @property
    def is_character(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.is_character


def _violations(chi: Table, sem: SumSemantics, char_sum: SumSemantics) -> Iterator[ClauseViolation]:
    plus = char_sum.plus
    for v in VALUES:
        expected = plus(chi(SuperValue.of(v.body, 0)), chi(SuperValue.of(0, v.soul)))
        if chi(v) != expected:
            yield ClauseViolation("decomposition", (v,), expected, chi(v))
    for v in VALUES:
        expected = 1 - chi(v)
        if chi(neg(v)) != expected:
            yield ClauseViolation("negation", (v,), expected, chi(neg(v)))
    for v, w in product(VALUES, repeat=2):
        expected = plus(chi(v), chi(w))
        actual = chi(disj(v, w, sem))
        if actual != expected:
            yield ClauseViolation("additivity", (v, w), expected, actual)
    for v, w in product(VALUES, repeat=2):
        expected = chi(v) & chi(w)
        actual = chi(conj(v, w, sem))
        if actual != expected:
            yield ClauseViolation("multiplicativity", (v, w), expected, actual)
    for v, w in product(VALUES, repeat=2):
        if leq(v, w) and chi(v) > chi(w):
            yield ClauseViolation("monotonicity", (v, w), chi(w), chi(v))


def is_character(
    chi: Table,
    sem: SumSemantics = SumSemantics.XOR,
    char_sum: SumSemantics = SumSemantics.XOR,
) -> CharacterVerdict:
    return CharacterVerdict(chi, sem, char_sum, tuple(_violations(chi, sem, char_sum)))


def all_tables() -> Iterator[Table]:
    for bits in product((0, 1), repeat=4):
        yield Table(bits)


def enumerate_characters(
    sem: SumSemantics = SumSemantics.XOR,
    char_sum: SumSemantics = SumSemantics.XOR,
) -> list[Table]:
    """Every table passing all five clauses, in lexicographic order. May be empty."""
    return [t for t in all_tables() if is_character(t, sem, char_sum)]


def generated_algebra(generators: Iterable[Table]) -> list[Table]:
    """Close ``generators`` plus the unit under pointwise product and sum."""
    elements = set(generators) | {UNIT_TABLE}
    while True:
        new = {op(a, b) for a in elements for b in elements for op in (mu, table_sum)} - elements
        if not new:
            break
        elements |= new
        if len(elements) > MAX_ALGEBRA_SIZE:
            raise ClosureTooLarge(f"generated algebra exceeds {MAX_ALGEBRA_SIZE} elements")
    return sorted(elements)


def bar_complex(generators: Iterable[Table], max_degree: int = 2) -> CochainComplex:
    """Bar-type cochain complex of the algebra generated by ``generators``.

    ``C^k`` is all functions A^k -> F2 (so ``C^0 = F2``) and

        (d phi)(a_0..a_k) = phi(a_1..a_k)
                            + sum_i phi(a_0..a_i a_{i+1}..a_k)
                            + phi(a_0..a_{k-1})

    with the product taken pointwise. Cochains stop at degree ``max_degree``,
    so the top Betti number is that of the truncated complex.
    """
    if not 0 <= max_degree <= MAX_BAR_DEGREE:
        raise DegreeTooLarge(f"max_degree must be in 0..{MAX_BAR_DEGREE}, got {max_degree}")
    algebra = generated_algebra(generators)
    size = len(algebra)
    table = [[algebra.index(mu(a, b)) for b in algebra] for a in algebra]

    def index(word: tuple[int, ...]) -> int:
        out = 0
        for letter in word:
            out = out * size + letter
        return out

    dims = tuple(size**k for k in range(max_degree + 1))
    diffs = []
    for k in range(max_degree):
        rows = []
        for word in product(range(size), repeat=k + 1):
            row = 1 << index(word[1:])
            for i in range(k):
                merged = word[:i] + (table[word[i]][word[i + 1]],) + word[i + 2 :]
                row ^= 1 << index(merged)
            row ^= 1 << index(word[:-1])
            rows.append(row)
        diffs.append(F2Matrix(dims[k + 1], dims[k], tuple(rows)))
    label = "bar complex of A = <" + ", ".join(str(t) for t in algebra) + ">"
    return CochainComplex(dims, tuple(diffs), label)
