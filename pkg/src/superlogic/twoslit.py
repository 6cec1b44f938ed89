"""Two-slit expansion: symbolic superlogic plus a labelled numeric reading."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import SumSemantics
from .formula import CanonicalPair, canonicalize, parse

TWO_SLIT = parse("(P1 + n(Q12)) & (P2 + n(Q21))")


class OutOfRangeProbability(ValueError):
    pass


@dataclass(frozen=True)
class TwoSlitScenario:
    p1: float
    p2: float
    q12: float
    q21: float

    def __post_init__(self):
        for name in ("p1", "p2", "q12", "q21"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise OutOfRangeProbability(f"{name}={value!r} is outside [0, 1]")


@dataclass(frozen=True)
class TwoSlitResult:
    symbolic: CanonicalPair
    body_weight: float
    interference_weight: float

    def to_json(self) -> dict:
        return {
            "expression": str(TWO_SLIT),
            "symbolic": {"body": str(self.symbolic.p), "soul": str(self.symbolic.q)},
            "body": self.body_weight,
            "interference": self.interference_weight,
            "numeric_layer": "interpretation: independent products, first order in n",
        }


def two_slit(s: TwoSlitScenario, sem: SumSemantics = SumSemantics.XOR) -> TwoSlitResult:
    """Expand ``(P1 + nQ12) & (P2 + nQ21)`` and weight its two grades.

    The weights multiply the probabilities of independent events; the n^2
    term contributes nothing. That numeric layer is a reading of the symbols,
    not something the algebra itself fixes.
    """
    pair = canonicalize(TWO_SLIT, sem)
    return TwoSlitResult(pair, s.p1 * s.p2, s.p1 * s.q21 + s.q12 * s.p2)
