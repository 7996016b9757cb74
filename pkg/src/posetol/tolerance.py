"""Tolerances on finite posets: axioms (1)-(4), blocks, 2-uniformity, neighbors.

A tolerance is a reflexive symmetric relation T satisfying

  (1) (x,y),(z,u) in T and x∨z, y∨u exist  =>  (x∨z, y∨u) in T
  (2) (x,y),(z,u) in T and x∧z, y∧u exist  =>  (x∧z, y∧u) in T
  (3) if T != P²: (x,y),(y,z) in T  =>  some u <= x,y,z has (u,y) in T
      and some v >= x,y,z has (y,v) in T
  (4) if T != P²: (x,y) in T  =>  some (z,u) in T with z <= x, z <= y,
      x <= u, y <= u such that every v with (v,x),(v,y) in T also has
      (v,z),(v,u) in T

Blocks are the maximal subsets B with B² ⊆ T (maximal cliques of T's
graph); T is 2-uniform when every block has exactly two elements, and
then each element has at most one lower and at most one upper T-neighbor
(a neighbor is a related covering element).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .bitsets import bit_indices
from .order import Poset
from .relation import Relation

_CONDITION_TAGS = (
    "reflexivity", "symmetry", "uniformity", "permutability",
    "(1)", "(2)", "(3)", "(4)", "(5)", "(6)", "(7)", "(8)",
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check, with a witness when it fails.

    ``violated`` is one of: "reflexivity", "symmetry", "uniformity",
    "permutability", or a condition tag "(1)".."(8)".  ``witness`` holds
    the element labels realizing the first violation in lexicographic
    index order.
    """

    holds: bool
    violated: str | None = None
    witness: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.holds != (self.violated is None):
            raise ValueError("violated tag must be present exactly when the check fails")
        if self.violated is not None and self.violated not in _CONDITION_TAGS:
            raise ValueError(f"unknown condition tag {self.violated!r}")

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def fail(cls, violated: str, witness: tuple[str, ...]) -> "Verdict":
        return cls(False, violated, witness)

    def describe(self) -> str:
        """One-line human rendering, e.g. ``condition (5): a,b via 0``."""
        if self.holds:
            return "ok"
        w = self.witness or ()
        if self.violated == "uniformity":
            return "uniformity: {%s}" % ",".join(w)
        if self.violated in ("(5)", "(6)") and len(w) == 3:
            return f"condition {self.violated}: {w[0]},{w[1]} via {w[2]}"
        if self.violated.startswith("("):
            return f"condition {self.violated}: " + ",".join(w)
        return f"{self.violated}: " + ",".join(w)


class ToleranceError(ValueError):
    """Raised when a relation claimed to be a tolerance is not one."""

    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        super().__init__(f"not a tolerance: {verdict.describe()}")


def check_tolerance(poset: Poset, rel: Relation) -> Verdict:
    """Decide whether ``rel`` is a tolerance on ``poset``.

    Checks reflexivity, symmetry, then (1)-(4) in that order and reports
    the first violation.  The scans run in lexicographic index order so
    the witness is deterministic.
    """
    n = poset.n
    if rel.n != n:
        raise ValueError(f"carrier mismatch: poset has {n} elements, relation {rel.n}")
    rows = rel.rows
    labels = poset.labels

    for i in range(n):
        if not rows[i] >> i & 1:
            return Verdict.fail("reflexivity", (labels[i],))
    for x in range(n):
        for y in bit_indices(rows[x]):
            if not rows[y] >> x & 1:
                return Verdict.fail("symmetry", (labels[x], labels[y]))

    pairs = [(x, y) for x in range(n) for y in bit_indices(rows[x])]
    jt = poset.join_table
    mt = poset.meet_table

    for x, y in pairs:
        jx = jt[x]
        jy = jt[y]
        for z, u in pairs:
            a = jx[z]
            if a < 0:
                continue
            b = jy[u]
            if b >= 0 and not rows[a] >> b & 1:
                return Verdict.fail("(1)", (labels[x], labels[y], labels[z], labels[u]))
    for x, y in pairs:
        mx = mt[x]
        my = mt[y]
        for z, u in pairs:
            a = mx[z]
            if a < 0:
                continue
            b = my[u]
            if b >= 0 and not rows[a] >> b & 1:
                return Verdict.fail("(2)", (labels[x], labels[y], labels[z], labels[u]))

    if rel == Relation.full(n):
        return Verdict.ok()

    up = poset.leq
    down = poset.down
    for x in range(n):
        for y in bit_indices(rows[x]):
            for z in bit_indices(rows[y]):
                if not down[x] & down[y] & down[z] & rows[y]:
                    return Verdict.fail("(3)", (labels[x], labels[y], labels[z]))
                if not up[x] & up[y] & up[z] & rows[y]:
                    return Verdict.fail("(3)", (labels[x], labels[y], labels[z]))

    for x, y in pairs:
        below = down[x] & down[y]
        above = up[x] & up[y]
        vmask = rows[x] & rows[y]
        found = False
        for z in bit_indices(below):
            if not rows[z] & above:
                continue
            if vmask & ~rows[z]:
                continue
            for u in bit_indices(rows[z] & above):
                if not vmask & ~rows[u]:
                    found = True
                    break
            if found:
                break
        if not found:
            return Verdict.fail("(4)", (labels[x], labels[y]))

    return Verdict.ok()


def _maximal_cliques(n: int, adj: tuple[int, ...]) -> list[int]:
    """Maximal cliques of an undirected graph, Bron-Kerbosch with pivoting.

    ``adj[v]`` is the neighbor mask of v with the self bit cleared.
    Returns clique bitmasks in deterministic order.
    """
    out: list[int] = []
    if n == 0:
        return out

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot, best = -1, -1
        for u in bit_indices(p | x):
            c = (p & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bit_indices(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


@dataclass(frozen=True)
class NeighborMap:
    """Unique lower/upper T-neighbor per element, None when absent."""

    lower: tuple[int | None, ...]
    upper: tuple[int | None, ...]


@dataclass(frozen=True)
class Tolerance:
    """A validated tolerance: a poset together with its relation.

    Construct through :meth:`validate`, which raises
    :class:`ToleranceError` when the relation fails the axioms.  The
    plain constructor skips validation and is meant for call sites that
    already hold a verdict.
    """

    poset: Poset
    rel: Relation

    @classmethod
    def validate(cls, poset: Poset, rel: Relation) -> "Tolerance":
        verdict = check_tolerance(poset, rel)
        if not verdict:
            raise ToleranceError(verdict)
        return cls(poset, rel)

    @cached_property
    def blocks(self) -> tuple[int, ...]:
        """Maximal cliques of the tolerance graph as bitmasks.

        Sorted by size, then by member indices; singleton blocks appear
        for elements related only to themselves.
        """
        n = self.poset.n
        adj = tuple(row & ~(1 << i) for i, row in enumerate(self.rel.rows))
        cliques = _maximal_cliques(n, adj)
        return tuple(sorted(cliques, key=lambda m: (m.bit_count(), tuple(bit_indices(m)))))

    def block_labels(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.poset.label_set(b) for b in self.blocks)

    def is_2_uniform(self) -> Verdict:
        """Holds iff every block has exactly two elements."""
        for b in self.blocks:
            if b.bit_count() != 2:
                return Verdict.fail("uniformity", self.poset.label_set(b))
        return Verdict.ok()

    @cached_property
    def neighbor_map(self) -> NeighborMap:
        """Lower/upper T-neighbor maps (2-uniform tolerances only).

        A lower T-neighbor of b is an element a with a covered by b and
        (a,b) in T; upper dually.  Uniqueness is a theorem for 2-uniform
        tolerances, so more than one candidate raises RuntimeError
        rather than picking silently.
        """
        if not self.is_2_uniform():
            raise ValueError("neighbor_map requires a 2-uniform tolerance")
        p = self.poset
        lower: list[int | None] = []
        upper: list[int | None] = []
        for i in range(p.n):
            row = self.rel.rows[i]
            ups = row & p.up_cover_masks[i]
            downs = row & p.down_cover_masks[i]
            if ups.bit_count() > 1 or downs.bit_count() > 1:
                raise RuntimeError(
                    f"neighbor uniqueness violated at {p.labels[i]!r}: "
                    "this contradicts a theorem about 2-uniform tolerances"
                )
            upper.append(ups.bit_length() - 1 if ups else None)
            lower.append(downs.bit_length() - 1 if downs else None)
        return NeighborMap(tuple(lower), tuple(upper))
