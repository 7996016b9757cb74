"""Amicability and permutability of pairs of 2-uniform tolerances.

For two 2-uniform tolerances T, S on one poset, with upper_T(x) the
unique upper T-neighbor of x (when present, dually lower_T):

  (5) a != b and lower_T(a) = lower_S(b) present
      =>  upper_S(a) and upper_T(b) present and equal
  (6) a != b and upper_T(a) = upper_S(b) present
      =>  lower_S(a) and lower_T(b) present and equal
  (7) a a (T,S)-top and b an upper T- or S-neighbor of a  =>  b a (T,S)-top
  (8) a a (T,S)-bottom and b a lower T- or S-neighbor of a  =>  b a (T,S)-bottom

An element is a (T,S)-bottom when it has both an upper T-neighbor and an
upper S-neighbor: split when they differ, adherent when they coincide.
Tops dually via lower neighbors.  An element is a T-top when it has a
lower T-neighbor, a T-bottom when it has an upper T-neighbor.

T and S are amicable when (5)-(8) all hold; they permute when
T∘S = S∘T.  The theorem this package exists to check says the two are
equivalent on posets without infinite chains, hence on all finite ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .tolerance import Tolerance, Verdict


@dataclass(frozen=True)
class ElementFlags:
    """Bottom/top classification of one element under a pair (T, S)."""

    split_bottom: bool
    adherent_bottom: bool
    split_top: bool
    adherent_top: bool
    t_top: bool
    t_bottom: bool
    s_top: bool
    s_bottom: bool

    @property
    def is_bottom(self) -> bool:
        return self.split_bottom or self.adherent_bottom

    @property
    def is_top(self) -> bool:
        return self.split_top or self.adherent_top


@dataclass(frozen=True)
class BottomTopClass:
    """Per-element (T,S) classification for a tolerance pair."""

    elements: tuple[ElementFlags, ...]

    def is_bottom(self, i: int) -> bool:
        return self.elements[i].is_bottom

    def is_top(self, i: int) -> bool:
        return self.elements[i].is_top


@dataclass(frozen=True)
class TolerancePair:
    """Two 2-uniform tolerances on the same poset.

    Construction checks the shared carrier and 2-uniformity of both
    members; the axioms (1)-(4) are the responsibility of
    Tolerance.validate.
    """

    t: Tolerance
    s: Tolerance

    def __post_init__(self) -> None:
        if self.t.poset != self.s.poset:
            raise ValueError("tolerances live on different posets")
        for name, tol in (("first", self.t), ("second", self.s)):
            verdict = tol.is_2_uniform()
            if not verdict:
                raise ValueError(f"{name} tolerance is not 2-uniform: {verdict.describe()}")

    @property
    def poset(self):
        return self.t.poset

    @cached_property
    def classification(self) -> BottomTopClass:
        nt = self.t.neighbor_map
        ns = self.s.neighbor_map
        flags = []
        for i in range(self.poset.n):
            ut, us = nt.upper[i], ns.upper[i]
            lt, ls = nt.lower[i], ns.lower[i]
            flags.append(ElementFlags(
                split_bottom=ut is not None and us is not None and ut != us,
                adherent_bottom=ut is not None and ut == us,
                split_top=lt is not None and ls is not None and lt != ls,
                adherent_top=lt is not None and lt == ls,
                t_top=lt is not None,
                t_bottom=ut is not None,
                s_top=ls is not None,
                s_bottom=us is not None,
            ))
        return BottomTopClass(tuple(flags))

    def _fail(self, tag: str, *indices: int) -> Verdict:
        labels = self.poset.labels
        return Verdict.fail(tag, tuple(labels[i] for i in indices))

    def check_condition_5(self) -> Verdict:
        """Common lower (T on a, S on b) forces a common upper (S on a, T on b)."""
        nt = self.t.neighbor_map
        ns = self.s.neighbor_map
        for a in range(self.poset.n):
            c = nt.lower[a]
            if c is None:
                continue
            b = ns.upper[c]
            if b is None or b == a:
                continue
            if ns.upper[a] is None or ns.upper[a] != nt.upper[b]:
                return self._fail("(5)", a, b, c)
        return Verdict.ok()

    def check_condition_6(self) -> Verdict:
        """Common upper (T on a, S on b) forces a common lower (S on a, T on b)."""
        nt = self.t.neighbor_map
        ns = self.s.neighbor_map
        for a in range(self.poset.n):
            c = nt.upper[a]
            if c is None:
                continue
            b = ns.lower[c]
            if b is None or b == a:
                continue
            if ns.lower[a] is None or ns.lower[a] != nt.lower[b]:
                return self._fail("(6)", a, b, c)
        return Verdict.ok()

    def check_condition_7(self) -> Verdict:
        """(T,S)-tops propagate upward along T- and S-neighbors."""
        nt = self.t.neighbor_map
        ns = self.s.neighbor_map
        cls = self.classification
        for a in range(self.poset.n):
            if not cls.is_top(a):
                continue
            for b in sorted({x for x in (nt.upper[a], ns.upper[a]) if x is not None}):
                if not cls.is_top(b):
                    return self._fail("(7)", a, b)
        return Verdict.ok()

    def check_condition_8(self) -> Verdict:
        """(T,S)-bottoms propagate downward along T- and S-neighbors."""
        nt = self.t.neighbor_map
        ns = self.s.neighbor_map
        cls = self.classification
        for a in range(self.poset.n):
            if not cls.is_bottom(a):
                continue
            for b in sorted({x for x in (nt.lower[a], ns.lower[a]) if x is not None}):
                if not cls.is_bottom(b):
                    return self._fail("(8)", a, b)
        return Verdict.ok()

    def conditions(self) -> dict[str, Verdict]:
        return {
            "(5)": self.check_condition_5(),
            "(6)": self.check_condition_6(),
            "(7)": self.check_condition_7(),
            "(8)": self.check_condition_8(),
        }

    def is_amicable(self) -> Verdict:
        """Conjunction of (5)-(8); reports the first failing condition."""
        for verdict in self.conditions().values():
            if not verdict:
                return verdict
        return Verdict.ok()

    def permute(self) -> Verdict:
        """Holds iff T∘S = S∘T; witness is the first differing pair."""
        ts = self.t.rel.compose(self.s.rel)
        st = self.s.rel.compose(self.t.rel)
        if ts == st:
            return Verdict.ok()
        labels = self.poset.labels
        for a in range(self.poset.n):
            diff = ts.rows[a] ^ st.rows[a]
            if diff:
                b = (diff & -diff).bit_length() - 1
                return Verdict.fail("permutability", (labels[a], labels[b]))
        raise AssertionError("unreachable: relations differ but no differing row")
