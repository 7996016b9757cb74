"""Relation algebra: composition convention, inverse, union, predicates."""

import random

import pytest

from posetol import Relation


def random_relation(n, rng):
    return Relation(n, tuple(rng.randrange(1 << n) for _ in range(n)))


def random_symmetric(n, rng):
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Relation(n, tuple(rows))


def compose_oracle(r1, r2):
    """Pair-scan composition, independent of the bitmask implementation."""
    p1, p2 = set(r1.pairs()), set(r2.pairs())
    out = {(a, b) for a, c in p1 for c2, b in p2 if c == c2}
    return Relation.from_pairs(r1.n, out)


class TestBasics:
    def test_identity_and_full(self):
        assert Relation.identity(3).pairs() == [(0, 0), (1, 1), (2, 2)]
        assert len(Relation.full(3).pairs()) == 9

    def test_from_pairs_and_has(self):
        r = Relation.from_pairs(3, [(0, 2), (1, 1)])
        assert r.has(0, 2) and r.has(1, 1) and not r.has(2, 0)

    def test_pairs_lexicographic(self):
        r = Relation.from_pairs(3, [(2, 0), (0, 1), (0, 0)])
        assert r.pairs() == [(0, 0), (0, 1), (2, 0)]

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            Relation(2, (0b100, 0b01))
        with pytest.raises(ValueError, match="rows"):
            Relation(2, (0b1,))


class TestCompose:
    def test_convention(self):
        r1 = Relation.from_pairs(3, [(0, 1)])
        r2 = Relation.from_pairs(3, [(1, 2)])
        assert r1.compose(r2).pairs() == [(0, 2)]
        assert r2.compose(r1).pairs() == []

    def test_identity_neutral(self):
        rng = random.Random(0)
        for n in (1, 3, 5):
            delta = Relation.identity(n)
            for _ in range(25):
                r = random_relation(n, rng)
                assert delta.compose(r) == r
                assert r.compose(delta) == r

    def test_associative(self):
        rng = random.Random(1)
        for _ in range(40):
            a, b, c = (random_relation(4, rng) for _ in range(3))
            assert a.compose(b).compose(c) == a.compose(b.compose(c))

    def test_against_pair_scan_oracle(self):
        rng = random.Random(2)
        for _ in range(40):
            a, b = random_relation(5, rng), random_relation(5, rng)
            assert a.compose(b) == compose_oracle(a, b)

    def test_carrier_mismatch(self):
        with pytest.raises(ValueError, match="carrier mismatch"):
            Relation.identity(2).compose(Relation.identity(3))


class TestInverse:
    def test_identity_fixed(self):
        assert Relation.identity(4).inverse() == Relation.identity(4)

    def test_involution(self):
        rng = random.Random(3)
        for _ in range(25):
            r = random_relation(4, rng)
            assert r.inverse().inverse() == r

    def test_inverse_of_compose(self):
        rng = random.Random(4)
        for _ in range(25):
            a, b = random_relation(4, rng), random_relation(4, rng)
            assert a.compose(b).inverse() == b.inverse().compose(a.inverse())

    def test_symmetric_compose_flip(self, fig1):
        """inverse(T∘S) = S∘T for symmetric T, S."""
        rng = random.Random(5)
        cases = [(random_symmetric(5, rng), random_symmetric(5, rng)) for _ in range(25)]
        cases.append((fig1.t.rel, fig1.s.rel))
        for t, s in cases:
            ts = t.compose(s)
            assert ts.inverse() == s.compose(t)
            assert ts.inverse() == compose_oracle(s, t)

    def test_permute_iff_symmetric_compose(self):
        """T∘S = S∘T is the same as T∘S being symmetric, for symmetric T,S."""
        rng = random.Random(6)
        seen = {True: 0, False: 0}
        for _ in range(200):
            t, s = random_symmetric(4, rng), random_symmetric(4, rng)
            ts = t.compose(s)
            outcome = ts == s.compose(t)
            assert outcome == ts.is_symmetric()
            seen[outcome] += 1
        assert seen[True] and seen[False]


class TestSetAlgebra:
    def test_union_laws(self):
        rng = random.Random(7)
        for _ in range(25):
            a, b, c = (random_relation(4, rng) for _ in range(3))
            assert a.union(b) == b.union(a)
            assert a.union(b).union(c) == a.union(b.union(c))
            assert a.union(a) == a

    def test_is_subset(self):
        a = Relation.from_pairs(3, [(0, 1)])
        b = Relation.from_pairs(3, [(0, 1), (1, 2)])
        assert a.is_subset(b) and not b.is_subset(a)
        assert a.union(b) == b

    def test_predicates(self, fig1):
        assert Relation.identity(3).is_reflexive()
        assert not Relation.from_pairs(2, [(0, 1)]).is_reflexive()
        assert fig1.t.rel.is_symmetric()
        assert not Relation.from_pairs(2, [(0, 0), (1, 1), (0, 1)]).is_symmetric()

    def test_carrier_mismatch(self):
        with pytest.raises(ValueError, match="carrier mismatch"):
            Relation.identity(2).union(Relation.identity(3))
        with pytest.raises(ValueError, match="carrier mismatch"):
            Relation.identity(2).is_subset(Relation.identity(3))


class TestOnFixtures:
    def test_fig3_compose_not_equal(self, fig3):
        ts = fig3.t.rel.compose(fig3.s.rel)
        st = fig3.s.rel.compose(fig3.t.rel)
        assert ts != st
        a, b = fig3.poset.index("a"), fig3.poset.index("b")
        assert ts.has(a, b) and not st.has(a, b)

    def test_fig1_compose_equal(self, fig1):
        assert fig1.t.rel.compose(fig1.s.rel) == fig1.s.rel.compose(fig1.t.rel)
