"""Binary relations on a dense carrier 0..n-1, one bitmask row per element."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bitsets import bit_indices


@dataclass(frozen=True)
class Relation:
    """A binary relation: bit b of ``rows[a]`` says (a, b) is related."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        universe = (1 << self.n) - 1
        if any(row & ~universe for row in self.rows):
            raise ValueError("relation row mentions elements out of range")

    @classmethod
    def identity(cls, n: int) -> "Relation":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def full(cls, n: int) -> "Relation":
        universe = (1 << n) - 1
        return cls(n, (universe,) * n)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for a, b in pairs:
            rows[a] |= 1 << b
        return cls(n, tuple(rows))

    def has(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def pairs(self) -> list[tuple[int, int]]:
        """All related pairs in lexicographic order."""
        return [(a, b) for a in range(self.n) for b in bit_indices(self.rows[a])]

    def _check_carrier(self, other: "Relation") -> None:
        if self.n != other.n:
            raise ValueError(f"carrier mismatch: {self.n} vs {other.n} elements")

    def compose(self, other: "Relation") -> "Relation":
        """Relational composition: (a, b) related iff some c has
        (a, c) in self and (c, b) in other."""
        self._check_carrier(other)
        out = []
        for row in self.rows:
            acc = 0
            for c in bit_indices(row):
                acc |= other.rows[c]
            out.append(acc)
        return Relation(self.n, tuple(out))

    def inverse(self) -> "Relation":
        cols = [0] * self.n
        for a, row in enumerate(self.rows):
            for b in bit_indices(row):
                cols[b] |= 1 << a
        return Relation(self.n, tuple(cols))

    def union(self, other: "Relation") -> "Relation":
        self._check_carrier(other)
        return Relation(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def is_subset(self, other: "Relation") -> bool:
        self._check_carrier(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self == self.inverse()
