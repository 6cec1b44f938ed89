"""The four-valued carrier {0, 1, n, 1+n} and its connectives.

An element ``P + nQ`` is stored as the bit pair ``(body, soul)``. The
same-grade ``+`` that appears inside the conjunction and disjunction rules
is read either as exclusive-or or as join, selected by :class:`SumSemantics`.
Under ``XOR`` the carrier is exactly the dual-number ring GF(2)[n]/(n^2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class SumSemantics(enum.Enum):
    XOR = "xor"
    OR = "or"

    def plus(self, a: int, b: int) -> int:
        return a ^ b if self is SumSemantics.XOR else a | b

    def __str__(self) -> str:
        return self.value


def semantics(value: "SumSemantics | str") -> SumSemantics:
    """Coerce ``"xor"``, ``"or"`` or a member into a :class:`SumSemantics`."""
    if isinstance(value, SumSemantics):
        return value
    try:
        return SumSemantics(value)
    except ValueError:
        raise ValueError(f"unknown sum semantics {value!r}; expected 'xor' or 'or'") from None


@dataclass(frozen=True, order=True)
class SuperValue:
    # field order gives code = body + 2*soul, i.e. 0 < 1 < n < 1+n
    soul: int
    body: int

    def __post_init__(self):
        if self.body not in (0, 1) or self.soul not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got body={self.body!r} soul={self.soul!r}")

    @classmethod
    def of(cls, body: int, soul: int) -> "SuperValue":
        return cls(soul=soul, body=body)

    @property
    def code(self) -> int:
        return self.body | (self.soul << 1)

    def __str__(self) -> str:
        return _NAMES[self.code]

    def __repr__(self) -> str:
        return f"SuperValue({_NAMES[self.code]!r})"


ZERO = SuperValue.of(0, 0)
ONE = SuperValue.of(1, 0)
N = SuperValue.of(0, 1)
ONE_N = SuperValue.of(1, 1)

#: Carrier in row order.
VALUES = (ZERO, ONE, N, ONE_N)
#: The body-only values, i.e. the classical truth values.
CLASSICAL = (ZERO, ONE)

_NAMES = ("0", "1", "n", "1+n")
_BY_NAME = {name: v for name, v in zip(_NAMES, VALUES)}


def parse_value(text: str) -> SuperValue:
    """Parse one of the exact strings ``"0"``, ``"1"``, ``"n"``, ``"1+n"``."""
    try:
        return _BY_NAME[text.strip().replace(" ", "")]
    except KeyError:
        raise ValueError(f"not a superlogic value: {text!r} (expected one of 0, 1, n, 1+n)") from None


def neg(v: SuperValue) -> SuperValue:
    return SuperValue.of(1 - v.body, 1 - v.soul)


def conj(v: SuperValue, w: SuperValue, sem: SumSemantics = SumSemantics.XOR) -> SuperValue:
    """``(P + nQ) & (P' + nQ') = P&P' + n(P&Q' + Q&P')``; the n^2 term is dropped."""
    return SuperValue.of(
        v.body & w.body,
        sem.plus(v.body & w.soul, v.soul & w.body),
    )


def disj(v: SuperValue, w: SuperValue, sem: SumSemantics = SumSemantics.XOR) -> SuperValue:
    """``(P + nQ) | (P' + nQ') = P|P' + n(P|Q' + Q|P')``.

    The soul term is not zero on classical arguments: ``disj(ONE, ZERO)`` is
    ``1+n``. This is the rule as written and is deliberately left alone.
    """
    return SuperValue.of(
        v.body | w.body,
        sem.plus(v.body | w.soul, v.soul | w.body),
    )


def formal_sum(v: SuperValue, w: SuperValue, sem: SumSemantics = SumSemantics.XOR) -> SuperValue:
    return SuperValue.of(sem.plus(v.body, w.body), sem.plus(v.soul, w.soul))


def n_shift(v: SuperValue) -> SuperValue:
    """Multiply by n: the body moves to the soul and the old soul is annihilated."""
    return SuperValue.of(0, v.body)


def body(v: SuperValue) -> int:
    """Classical-limit projection (n := 0), also used as the designation map."""
    return v.body


def soul(v: SuperValue) -> int:
    return v.soul


def leq(v: SuperValue, w: SuperValue) -> int:
    """Componentwise implication order on (body, soul)."""
    return int(v.body <= w.body and v.soul <= w.soul)


def diag(v: SuperValue) -> tuple[SuperValue, SuperValue]:
    return (v, v)


def split(v: SuperValue) -> tuple[SuperValue, SuperValue]:
    """Return ``(P, Q)`` as carrier values with ``v == P + n*Q``."""
    return SuperValue.of(v.body, 0), SuperValue.of(v.soul, 0)
