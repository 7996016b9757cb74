"""Exhaustive machinery: all 2-uniform tolerances on a poset, corpora of
all small posets, and the theorem harness (amicable iff permute).

Poset generation emits every reflexive transitive upper-triangular bit
matrix, i.e. every poset whose labeling is a linear extension.  Every
isomorphism class of posets on n elements appears this way (every finite
poset has a linear extension); classes may repeat, which is harmless for
universally quantified checking.  The optional dedup pass canonicalizes
by minimizing the matrix bit string over label permutations, restricted
to permutations preserving an iterated structural coloring.

Tolerance enumeration searches subsets E of the cover relation in which
every element has at most one outgoing edge, at most one incoming edge,
and at least one incident edge; each candidate Δ ∪ E ∪ E⁻¹ is then
validated against the tolerance axioms and 2-uniformity.  That search
space is justified by a theorem (off-diagonal pairs of a 2-uniform
tolerance are cover pairs, with unique neighbors per side): the theorem
is only trusted for pruning, never for acceptance, and a brute-force
scan over all reflexive-symmetric relations is provided as a
cross-check; on carriers with at most two elements the full relation P²
is additionally tested explicitly.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .amicability import TolerancePair
from .bitsets import bit_indices
from .order import Poset
from .relation import Relation
from .tolerance import Tolerance, Verdict, check_tolerance

MAX_N_CAP = 7


def _pair_positions(n: int) -> list[tuple[int, int]]:
    """Strict upper-triangle positions in row-major order; bit k of a
    pattern refers to the k-th pair here."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _rows_of_pattern(n: int, pattern: int, positions: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    rows = [1 << i for i in range(n)]
    for k, (i, j) in enumerate(positions):
        if pattern >> k & 1:
            rows[i] |= 1 << j
    return tuple(rows)


def _is_transitive(n: int, rows: Sequence[int]) -> bool:
    for i in range(n):
        above = rows[i] & ~(1 << i)
        for j in bit_indices(above):
            if rows[j] & ~rows[i]:
                return False
    return True


def strict_pattern(poset: Poset) -> int:
    """Strict upper-triangle bit pattern of a poset's order matrix.

    Stable key for golden files; inverse of the generator's encoding for
    corpus members.
    """
    pattern = 0
    for k, (i, j) in enumerate(_pair_positions(poset.n)):
        if poset.le(i, j):
            pattern |= 1 << k
    return pattern


def _refined_colors(n: int, rows: Sequence[int], down: Sequence[int]) -> tuple[int, ...]:
    """Iterated structural coloring, stable under isomorphism.

    Starts from (strict up-set size, strict down-set size) and refines by
    the color multisets of strict up- and down-sets until the partition
    stops splitting.  Colors are interned to dense ranks each round.
    """
    ups = [rows[i] & ~(1 << i) for i in range(n)]
    downs = [down[i] & ~(1 << i) for i in range(n)]
    raw = [(ups[i].bit_count(), downs[i].bit_count()) for i in range(n)]
    ranks = {c: r for r, c in enumerate(sorted(set(raw)))}
    color = tuple(ranks[c] for c in raw)
    while True:
        raw2 = [
            (
                color[i],
                tuple(sorted(color[j] for j in bit_indices(ups[i]))),
                tuple(sorted(color[j] for j in bit_indices(downs[i]))),
            )
            for i in range(n)
        ]
        ranks = {c: r for r, c in enumerate(sorted(set(raw2)))}
        new = tuple(ranks[c] for c in raw2)
        if len(set(new)) == len(set(color)):
            return new
        color = new


def canonical_key(poset: Poset) -> int:
    """Isomorphism-invariant canonical form of the order matrix.

    Minimum over color-respecting label permutations of the n x n bit
    string; two generated posets get equal keys iff they are isomorphic.
    """
    n = poset.n
    rows = poset.leq
    color = _refined_colors(n, rows, poset.down)
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(color):
        groups.setdefault(c, []).append(i)
    blocks = [groups[c] for c in sorted(groups)]
    best: int | None = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [i for part in parts for i in part]
        key = 0
        for pos_i, el_i in enumerate(perm):
            row = rows[el_i]
            for pos_j, el_j in enumerate(perm):
                if row >> el_j & 1:
                    key |= 1 << (pos_i * n + pos_j)
        if best is None or key < best:
            best = key
    assert best is not None
    return best


@dataclass(frozen=True)
class PosetCorpus:
    """All posets on 1..max_n elements in upper-triangular labeling.

    Iteration order is deterministic: sizes ascending, patterns
    ascending within a size.  With dedup, only the first representative
    of each isomorphism class survives.
    """

    max_n: int
    dedup: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.max_n <= MAX_N_CAP:
            raise ValueError(f"max_n must be between 1 and {MAX_N_CAP}, got {self.max_n}")

    def posets_of_size(self, n: int) -> Iterator[Poset]:
        positions = _pair_positions(n)
        labels = tuple(str(i) for i in range(n))
        seen: set[int] = set()
        for pattern in range(1 << len(positions)):
            rows = _rows_of_pattern(n, pattern, positions)
            if not _is_transitive(n, rows):
                continue
            poset = Poset(labels, rows)
            if self.dedup:
                key = canonical_key(poset)
                if key in seen:
                    continue
                seen.add(key)
            yield poset

    def __iter__(self) -> Iterator[Poset]:
        for n in range(1, self.max_n + 1):
            yield from self.posets_of_size(n)

    @cached_property
    def counts(self) -> dict[int, int]:
        """Number of emitted posets per size."""
        return {n: sum(1 for _ in self.posets_of_size(n)) for n in range(1, self.max_n + 1)}


def generate_posets(max_n: int, dedup: bool = False) -> PosetCorpus:
    """Corpus of all posets on up to max_n elements (hard cap 7)."""
    return PosetCorpus(max_n, dedup)


def enumerate_2uniform(poset: Poset) -> list[Tolerance]:
    """All 2-uniform tolerances on a poset, sorted by relation bits."""
    n = poset.n
    covers = poset.covers
    m = len(covers)
    all_mask = (1 << n) - 1

    incidence = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        a, b = covers[k]
        incidence[k] = incidence[k + 1] | 1 << a | 1 << b

    found: dict[tuple[int, ...], Relation] = {}

    def admit(rel: Relation) -> None:
        if rel.rows in found:
            return
        if not check_tolerance(poset, rel):
            return
        if not Tolerance(poset, rel).is_2_uniform():
            return
        found[rel.rows] = rel

    def search(k: int, used_out: int, used_in: int, covered: int, rows: list[int]) -> None:
        if covered | incidence[k] != all_mask:
            return
        if k == m:
            if covered == all_mask:
                admit(Relation(n, tuple(rows)))
            return
        a, b = covers[k]
        search(k + 1, used_out, used_in, covered, rows)
        if not used_out >> a & 1 and not used_in >> b & 1:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
            search(k + 1, used_out | 1 << a, used_in | 1 << b, covered | 1 << a | 1 << b, rows)
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)

    search(0, 0, 0, 0, [1 << i for i in range(n)])
    if n <= 2:
        admit(Relation.full(n))

    return [Tolerance(poset, rel) for rows, rel in sorted(found.items())]


def brute_force_2uniform(poset: Poset) -> list[Tolerance]:
    """Oracle enumeration: scan all reflexive-symmetric relations.

    Exponential in n(n-1)/2; intended for cross-checking the pruned
    search at n <= 5.  Accepts exactly the relations passing the
    tolerance axioms and 2-uniformity.
    """
    n = poset.n
    positions = _pair_positions(n)
    out: list[Tolerance] = []
    for pattern in range(1 << len(positions)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(positions):
            if pattern >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        blocks_can_be_pairs = True
        for i in range(n):
            adj = rows[i] & ~(1 << i)
            if not adj:
                blocks_can_be_pairs = False
                break
            for j in bit_indices(adj):
                if rows[i] & rows[j] & ~(1 << i | 1 << j):
                    blocks_can_be_pairs = False
                    break
            if not blocks_can_be_pairs:
                break
        if not blocks_can_be_pairs:
            continue
        rel = Relation(n, tuple(rows))
        if not check_tolerance(poset, rel):
            continue
        t = Tolerance(poset, rel)
        if t.is_2_uniform():
            out.append(t)
    out.sort(key=lambda t: t.rel.rows)
    return out


_FILTERS = ("all", "permuting", "non_permuting", "amicable", "non_amicable")


def find_pairs(poset: Poset, tag: str = "all") -> list[TolerancePair]:
    """Ordered pairs of 2-uniform tolerances matching a filter tag.

    Tags: all, permuting, non_permuting, amicable, non_amicable.
    Diagonal pairs (T, T) are included.
    """
    if tag not in _FILTERS:
        raise ValueError(f"unknown filter tag {tag!r}; expected one of {', '.join(_FILTERS)}")
    tols = enumerate_2uniform(poset)
    out = []
    for t, s in itertools.product(tols, tols):
        pair = TolerancePair(t, s)
        if tag == "permuting" and not pair.permute():
            continue
        if tag == "non_permuting" and pair.permute():
            continue
        if tag == "amicable" and not pair.is_amicable():
            continue
        if tag == "non_amicable" and pair.is_amicable():
            continue
        out.append(pair)
    return out


@dataclass(frozen=True)
class Counterexample:
    """A theorem violation, serialized with enough context to replay."""

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    t_blocks: tuple[tuple[str, ...], ...]
    s_blocks: tuple[tuple[str, ...], ...]
    amicable: Verdict
    permute: Verdict

    def to_dict(self) -> dict:
        return {
            "poset": {
                "elements": list(self.elements),
                "covers": [f"{a}<{b}" for a, b in self.covers],
            },
            "t_blocks": [list(b) for b in self.t_blocks],
            "s_blocks": [list(b) for b in self.s_blocks],
            "amicable": _verdict_dict(self.amicable),
            "permute": _verdict_dict(self.permute),
        }


def _verdict_dict(v: Verdict) -> dict:
    return {
        "holds": v.holds,
        "violated": v.violated,
        "witness": list(v.witness) if v.witness is not None else None,
    }


@dataclass
class TheoremReport:
    """Tally of an exhaustive amicable-iff-permute verification run."""

    max_n: int
    dedup: bool
    posets_checked: int = 0
    tolerance_pairs_checked: int = 0
    agreements: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        """JSON document; wall_time_seconds is the only field that can
        differ between otherwise identical runs."""
        return {
            "theorem": "amicable iff permute",
            "max_n": self.max_n,
            "dedup": self.dedup,
            "posets_checked": self.posets_checked,
            "tolerance_pairs_checked": self.tolerance_pairs_checked,
            "agreements": self.agreements,
            "counterexamples": [ce.to_dict() for ce in self.counterexamples],
            "wall_time_seconds": round(self.wall_time, 6),
        }

    def render_text(self) -> str:
        lines = [
            "theorem: amicable iff permute",
            f"max n: {self.max_n}" + (" (dedup)" if self.dedup else ""),
            f"posets checked: {self.posets_checked}",
            f"tolerance pairs checked: {self.tolerance_pairs_checked}",
            f"agreements: {self.agreements}",
            f"counterexamples: {len(self.counterexamples)}",
        ]
        for ce in self.counterexamples:
            lines.append("counterexample:")
            lines.append("  covers: " + " ".join(f"{a}<{b}" for a, b in ce.covers))
            lines.append("  T blocks: " + " ".join("{%s}" % ",".join(b) for b in ce.t_blocks))
            lines.append("  S blocks: " + " ".join("{%s}" % ",".join(b) for b in ce.s_blocks))
            lines.append(f"  amicable: {'yes' if ce.amicable else 'no (' + ce.amicable.describe() + ')'}")
            lines.append(f"  permute: {'yes' if ce.permute else 'no (' + ce.permute.describe() + ')'}")
        return "\n".join(lines)


def _check_poset(poset: Poset) -> tuple[int, int, list[Counterexample]]:
    """Worker: verify the theorem over all ordered tolerance pairs of one poset."""
    tols = enumerate_2uniform(poset)
    pairs = 0
    agreements = 0
    ces: list[Counterexample] = []
    cover_labels = tuple((poset.labels[a], poset.labels[b]) for a, b in poset.covers)
    for t, s in itertools.product(tols, tols):
        pair = TolerancePair(t, s)
        amicable = pair.is_amicable()
        permute = pair.permute()
        pairs += 1
        if amicable.holds == permute.holds:
            agreements += 1
        else:
            ces.append(Counterexample(
                elements=poset.labels,
                covers=cover_labels,
                t_blocks=t.block_labels(),
                s_blocks=s.block_labels(),
                amicable=amicable,
                permute=permute,
            ))
    return pairs, agreements, ces


def verify_theorem(corpus: PosetCorpus, jobs: int = 1) -> TheoremReport:
    """Check amicable iff permute over every tolerance pair in the corpus.

    Posets are independent work items; with jobs > 1 they are spread
    over a process pool and the tallies merged in corpus order, so the
    report content is identical to a single-threaded run.
    """
    start = time.perf_counter()
    report = TheoremReport(max_n=corpus.max_n, dedup=corpus.dedup)
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.imap(_check_poset, corpus, chunksize=16)
            for pairs, agreements, ces in results:
                report.posets_checked += 1
                report.tolerance_pairs_checked += pairs
                report.agreements += agreements
                report.counterexamples.extend(ces)
    else:
        for poset in corpus:
            pairs, agreements, ces = _check_poset(poset)
            report.posets_checked += 1
            report.tolerance_pairs_checked += pairs
            report.agreements += agreements
            report.counterexamples.extend(ces)
    report.wall_time = time.perf_counter() - start
    return report
