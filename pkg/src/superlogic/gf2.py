"""GF(2) matrices as lists of int row bitsets, and cochain complexes over them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence


class InvalidComplex(ValueError):
    pass


@dataclass(frozen=True)
class F2Matrix:
    rows: int
    cols: int
    # bit j of data[i] is entry (i, j)
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        if any(r < 0 or r >= limit for r in self.data):
            raise ValueError(f"row has bits beyond column {self.cols}")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, size: int) -> "F2Matrix":
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def from_lists(cls, bits: Sequence[Sequence[int]], cols: int | None = None) -> "F2Matrix":
        if cols is None:
            cols = len(bits[0]) if bits else 0
        data = []
        for row in bits:
            if len(row) != cols:
                raise ValueError("ragged bit grid")
            value = 0
            for j, b in enumerate(row):
                if b not in (0, 1):
                    raise ValueError(f"entry {b!r} is not a bit")
                value |= b << j
            data.append(value)
        return cls(len(data), cols, tuple(data))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "bits": self.to_lists()}

    @classmethod
    def from_json(cls, obj: dict) -> "F2Matrix":
        m = cls.from_lists(obj["bits"], obj["cols"])
        if m.rows != obj["rows"]:
            raise ValueError(f"declared {obj['rows']} rows, found {m.rows}")
        return m

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for row in self.data:
            acc = 0
            j = 0
            while row:
                if row & 1:
                    acc ^= other.data[j]
                row >>= 1
                j += 1
            out.append(acc)
        return F2Matrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.cols
        for i, row in enumerate(self.data):
            j = 0
            while row:
                if row & 1:
                    cols[j] |= 1 << i
                row >>= 1
                j += 1
        return F2Matrix(self.cols, self.rows, tuple(cols))

    def is_zero(self) -> bool:
        return not any(self.data)

    def rank(self) -> int:
        # eliminate along the shorter side
        rows = self.data if self.rows <= self.cols else self.transpose().data
        return gf2_rank(rows)


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) of row bitsets, by reduction against leading bits."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = row
                break
            row ^= pivots[lead]
    return len(pivots)


@dataclass(frozen=True)
class CochainComplex:
    """``C^0 -d_0-> C^1 -d_1-> ...``; validated on construction."""

    dims: tuple[int, ...]
    differentials: tuple[F2Matrix, ...]
    label: str = ""

    def __post_init__(self):
        if len(self.differentials) >= len(self.dims) and self.differentials:
            raise InvalidComplex(f"{len(self.differentials)} differentials need at least {len(self.differentials) + 1} dims")
        for k, d in enumerate(self.differentials):
            if d.cols != self.dims[k] or d.rows != self.dims[k + 1]:
                raise InvalidComplex(
                    f"d_{k} is {d.rows}x{d.cols}, expected {self.dims[k + 1]}x{self.dims[k]}"
                )
        for k in range(len(self.differentials) - 1):
            if not (self.differentials[k + 1] @ self.differentials[k]).is_zero():
                raise InvalidComplex(f"d_{k + 1} d_{k} != 0")

    def to_json(self) -> dict:
        out = {"dims": list(self.dims), "differentials": [d.to_json() for d in self.differentials]}
        if self.label:
            out["label"] = self.label
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CochainComplex":
        diffs = tuple(F2Matrix.from_json(d) for d in obj["differentials"])
        dims = obj.get("dims")
        if dims is None:
            dims = [diffs[0].cols] + [d.rows for d in diffs] if diffs else [0]
        return cls(tuple(dims), diffs, obj.get("label", ""))

    @classmethod
    def load(cls, path: str) -> "CochainComplex":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def dump(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)


def betti(complex_: CochainComplex) -> list[int]:
    """``dim H^k = dims[k] - rank d_k - rank d_{k-1}``; missing differentials are zero."""
    ranks = [d.rank() for d in complex_.differentials]
    out = []
    for k, dim in enumerate(complex_.dims):
        outgoing = ranks[k] if k < len(ranks) else 0
        incoming = ranks[k - 1] if 0 < k <= len(ranks) else 0
        out.append(dim - outgoing - incoming)
    return out
