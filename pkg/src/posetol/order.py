"""Finite posets with dense integer elements and bitmask order rows.

A poset on n elements stores one int per element: bit j of ``leq[i]``
says whether element i is below element j.  At the scale this package
targets (n up to ~16) every derived structure (covers, join and meet
tables, intervals) fits comfortably in a few machine words per element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .bitsets import bit_indices

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class PosetError(ValueError):
    """Raised when the input does not describe a finite poset."""


def _check_labels(labels: Sequence[str]) -> None:
    seen = set()
    for lab in labels:
        if not _LABEL_RE.match(lab):
            raise PosetError(f"bad label {lab!r}: expected [A-Za-z0-9_]+")
        if lab in seen:
            raise PosetError(f"duplicate label {lab!r}")
        seen.add(lab)


@dataclass(frozen=True)
class Poset:
    """An immutable finite poset.

    ``labels[i]`` names element i; ``leq[i]`` is the bitmask of the
    up-set of i, so ``leq[i] >> j & 1`` decides i <= j.  Instances are
    created through :func:`build_poset` or :meth:`Poset.from_leq`, both
    of which validate the order axioms.
    """

    labels: tuple[str, ...]
    leq: tuple[int, ...]

    @classmethod
    def from_leq(cls, labels: Sequence[str], leq: Sequence[int]) -> "Poset":
        """Build a poset from explicit up-set rows, validating the axioms."""
        labels = tuple(labels)
        leq = tuple(leq)
        _check_labels(labels)
        n = len(labels)
        if len(leq) != n:
            raise PosetError(f"{n} labels but {len(leq)} order rows")
        universe = (1 << n) - 1
        for i in range(n):
            if leq[i] & ~universe:
                raise PosetError(f"order row of {labels[i]!r} mentions elements out of range")
            if not leq[i] >> i & 1:
                raise PosetError(f"not reflexive at {labels[i]!r}")
            for j in bit_indices(leq[i]):
                if j != i and leq[j] >> i & 1:
                    raise PosetError(f"cycle: {labels[i]!r} and {labels[j]!r} are mutually below each other")
                if leq[j] & ~leq[i]:
                    raise PosetError(f"not transitive at {labels[i]!r} <= {labels[j]!r}")
        return cls(labels, leq)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"unknown label {label!r}") from None

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def le(self, i: int, j: int) -> bool:
        """Decide i <= j."""
        return bool(self.leq[i] >> j & 1)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Down-set masks: bit j of ``down[i]`` says j <= i."""
        cols = [0] * self.n
        for i, row in enumerate(self.leq):
            for j in bit_indices(row):
                cols[j] |= 1 << i
        return tuple(cols)

    @cached_property
    def _strict_up(self) -> tuple[int, ...]:
        return tuple(row & ~(1 << i) for i, row in enumerate(self.leq))

    @cached_property
    def up_cover_masks(self) -> tuple[int, ...]:
        """``up_cover_masks[i]`` holds the elements covering i."""
        strict = self._strict_up
        out = []
        for i in range(self.n):
            beyond = 0
            for k in bit_indices(strict[i]):
                beyond |= strict[k]
            out.append(strict[i] & ~beyond)
        return tuple(out)

    @cached_property
    def down_cover_masks(self) -> tuple[int, ...]:
        """``down_cover_masks[i]`` holds the elements covered by i."""
        cols = [0] * self.n
        for i, row in enumerate(self.up_cover_masks):
            for j in bit_indices(row):
                cols[j] |= 1 << i
        return tuple(cols)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """All cover pairs (i, j) with i covered by j, sorted."""
        return tuple(
            (i, j) for i in range(self.n) for j in bit_indices(self.up_cover_masks[i])
        )

    def is_cover(self, i: int, j: int) -> bool:
        """Decide whether j covers i (i < j with nothing strictly between)."""
        return bool(self.up_cover_masks[i] >> j & 1)

    def join(self, i: int, j: int) -> int | None:
        """Least upper bound of i and j, or None when absent."""
        ub = self.leq[i] & self.leq[j]
        for m in bit_indices(ub):
            if not ub & ~self.leq[m]:
                return m
        return None

    def meet(self, i: int, j: int) -> int | None:
        """Greatest lower bound of i and j, or None when absent."""
        lb = self.down[i] & self.down[j]
        for m in bit_indices(lb):
            if not lb & ~self.down[m]:
                return m
        return None

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        """Join of every pair, with -1 for absent joins."""
        n = self.n
        return tuple(
            tuple(j if (j := self.join(a, b)) is not None else -1 for b in range(n))
            for a in range(n)
        )

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        """Meet of every pair, with -1 for absent meets."""
        n = self.n
        return tuple(
            tuple(m if (m := self.meet(a, b)) is not None else -1 for b in range(n))
            for a in range(n)
        )

    def is_lattice(self) -> bool:
        """Decide whether every pair has both a join and a meet."""
        return all(
            v >= 0 for row in self.join_table for v in row
        ) and all(v >= 0 for row in self.meet_table for v in row)

    def is_convex(self, members: int) -> bool:
        """Decide whether the bitmask ``members`` is order-convex.

        Convex means closed under intervals: a <= v <= b with both
        endpoints inside forces v inside.
        """
        for a in bit_indices(members):
            for b in bit_indices(self.leq[a] & members):
                if self.leq[a] & self.down[b] & ~members:
                    return False
        return True

    def subset_mask(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def label_set(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bit_indices(mask))


def build_poset(labels: Sequence[str], cover_pairs: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from labels and claimed cover pairs.

    Takes the reflexive transitive closure of the pairs, then insists the
    result is antisymmetric and that the input pairs are exactly the cover
    relation of the resulting order: duplicated, self, or transitively
    redundant pairs are rejected rather than silently absorbed.
    """
    labels = tuple(labels)
    _check_labels(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)

    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for x, y in cover_pairs:
        for lab in (x, y):
            if lab not in index:
                raise PosetError(f"unknown label {lab!r} in cover pair")
        if x == y:
            raise PosetError(f"self cover {x!r}<{y!r}")
        pair = (index[x], index[y])
        if pair in seen:
            raise PosetError(f"duplicate cover pair {x!r}<{y!r}")
        seen.add(pair)
        pairs.append(pair)

    rows = [1 << i for i in range(n)]
    for i, j in pairs:
        rows[i] |= 1 << j
    for k in range(n):
        for i in range(n):
            if rows[i] >> k & 1:
                rows[i] |= rows[k]

    for i in range(n):
        for j in bit_indices(rows[i]):
            if j != i and rows[j] >> i & 1:
                raise PosetError(
                    f"cycle through {labels[i]!r} and {labels[j]!r}"
                )

    poset = Poset(labels, tuple(rows))
    true_covers = set(poset.covers)
    for i, j in pairs:
        if (i, j) not in true_covers:
            raise PosetError(
                f"redundant cover pair {labels[i]!r}<{labels[j]!r}: implied by the others"
            )
    return poset
