"""Vector fields on the four-valued carrier and superfield expansion.

A vector field is an endomap X with

    X(P + nQ)  = X(P) + n X(Q)
    X(!L)      = !X(L)
    X(L | K)   = (X(L) | K) & (L | X(K))
    X(L & K)   = (X(L) & K) | (L & X(K))

All four are checked over the whole carrier, so a verdict is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Mapping

from .algebra import (
    VALUES,
    SumSemantics,
    SuperValue,
    conj,
    disj,
    formal_sum,
    n_shift,
    neg,
    parse_value,
    split,
)


@dataclass(frozen=True, order=True)
class EndoMap:
    """A total map on the carrier, stored as images of (0, 1, n, 1+n)."""

    images: tuple[SuperValue, SuperValue, SuperValue, SuperValue]

    def __call__(self, v: SuperValue) -> SuperValue:
        return self.images[v.code]

    @classmethod
    def from_function(cls, fn: Callable[[SuperValue], SuperValue]) -> "EndoMap":
        return cls(tuple(fn(v) for v in VALUES))

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "EndoMap":
        return cls(tuple(parse_value(data[str(v)]) for v in VALUES))

    def to_json(self) -> dict[str, str]:
        return {str(v): str(self(v)) for v in VALUES}

    def __str__(self) -> str:
        return ", ".join(f"{k}->{w}" for k, w in self.to_json().items())


IDENTITY = EndoMap(VALUES)

# BodyFunction is any endomap; the name marks its role in superfield_expand.
BodyFunction = EndoMap


@dataclass(frozen=True)
class Violation:
    axiom: str
    args: tuple[SuperValue, ...]
    expected: SuperValue
    actual: SuperValue

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "args": [str(a) for a in self.args],
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


@dataclass(frozen=True)
class VectorFieldVerdict:
    violations: tuple[Violation, ...]

    @property
    def is_vector_field(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.is_vector_field


def _violations(x: EndoMap, sem: SumSemantics) -> Iterator[Violation]:
    for v in VALUES:
        p, q = split(v)
        rhs = formal_sum(x(p), n_shift(x(q)), sem)
        if x(v) != rhs:
            yield Violation("linearity", (v,), rhs, x(v))
    for v in VALUES:
        rhs = neg(x(v))
        if x(neg(v)) != rhs:
            yield Violation("negation", (v,), rhs, x(neg(v)))
    for v, w in product(VALUES, repeat=2):
        rhs = conj(disj(x(v), w, sem), disj(v, x(w), sem), sem)
        lhs = x(disj(v, w, sem))
        if lhs != rhs:
            yield Violation("or-rule", (v, w), rhs, lhs)
    for v, w in product(VALUES, repeat=2):
        rhs = disj(conj(x(v), w, sem), conj(v, x(w), sem), sem)
        lhs = x(conj(v, w, sem))
        if lhs != rhs:
            yield Violation("and-rule", (v, w), rhs, lhs)


def is_vector_field(x: EndoMap, sem: SumSemantics = SumSemantics.XOR) -> VectorFieldVerdict:
    return VectorFieldVerdict(tuple(_violations(x, sem)))


def all_endomaps() -> Iterator[EndoMap]:
    """The 256 endomaps in lexicographic order of their image tables."""
    for images in product(VALUES, repeat=4):
        yield EndoMap(images)


def enumerate_vector_fields(sem: SumSemantics = SumSemantics.XOR) -> list[EndoMap]:
    # any() stops at the first violation, which keeps the scan cheap
    return [x for x in all_endomaps() if not any(True for _ in _violations(x, sem))]


def combine(op: str, x: EndoMap, y: EndoMap | None = None, sem: SumSemantics = SumSemantics.XOR) -> EndoMap:
    """Pointwise ``not``, ``or`` or ``and`` of vector fields."""
    if op == "not":
        return EndoMap.from_function(lambda v: neg(x(v)))
    if y is None:
        raise ValueError(f"combine({op!r}) needs a second operand")
    if op == "or":
        return EndoMap.from_function(lambda v: disj(x(v), y(v), sem))
    if op == "and":
        return EndoMap.from_function(lambda v: conj(x(v), y(v), sem))
    raise ValueError(f"unknown combinator {op!r}; expected 'not', 'or' or 'and'")


def closure_report(fields: list[EndoMap], sem: SumSemantics = SumSemantics.XOR) -> dict[str, dict]:
    """Count how often each combinator leaves the given set of vector fields."""
    out = {}
    for op in ("not", "or", "and"):
        if op == "not":
            results = [combine(op, x, sem=sem) for x in fields]
        else:
            results = [combine(op, x, y, sem) for x, y in product(fields, repeat=2)]
        escapes = sum(1 for r in results if not is_vector_field(r, sem))
        out[op] = {"checked": len(results), "not_vector_fields": escapes, "closed": escapes == 0}
    return out


def superfield_expand(phi: BodyFunction, value: SuperValue, sem: SumSemantics = SumSemantics.XOR) -> SuperValue:
    """``Phi(L) = Phi(P) + nQ*Phi(P) + Phi(nQ)``, juxtaposition read as conjunction."""
    p = SuperValue.of(value.body, 0)
    nq = SuperValue.of(0, value.soul)
    first = phi(p)
    return formal_sum(formal_sum(first, conj(nq, first, sem), sem), phi(nq), sem)
