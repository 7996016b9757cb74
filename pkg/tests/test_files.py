"""Text format parsing, serialization, and position-carrying errors."""

import pytest

from posetol import (
    ParseError,
    PosetCorpus,
    PosetError,
    Relation,
    build_poset,
    check_tolerance,
    enumerate_2uniform,
    parse_poset,
    parse_tolerance,
    poset_to_text,
    tolerance_to_text,
)


class TestParsePoset:
    def test_basic(self):
        p = parse_poset("poset\nelements: 0 a 1\ncovers: 0<a a<1\n")
        assert p.labels == ("0", "a", "1")
        assert p.le(0, 2) and not p.le(2, 0)

    def test_comments_and_blanks(self):
        p = parse_poset(
            "# heading comment\n"
            "\n"
            "poset\n"
            "elements: x y   # the rest of the line is comment\n"
            "\n"
            "covers: x<y # so is this\n"
        )
        assert p.labels == ("x", "y") and p.covers == ((0, 1),)

    def test_empty_covers(self):
        p = parse_poset("poset\nelements: x y\ncovers:\n")
        assert p.covers == ()

    def test_fixture_texture(self, fig1):
        assert fig1.poset.labels == ("0", "a", "b", "c", "d", "e", "f", "g", "1")


class TestParsePosetErrors:
    def test_empty_text(self):
        with pytest.raises(ParseError, match="missing poset line") as info:
            parse_poset("")
        assert (info.value.line, info.value.column) == (1, 1)

    def test_wrong_header(self):
        with pytest.raises(ParseError, match="expected poset, got 'order'") as info:
            parse_poset("order\nelements: a\ncovers:\n")
        assert (info.value.line, info.value.column) == (1, 1)

    def test_junk_after_header(self):
        with pytest.raises(ParseError, match="unexpected token 'x' after header") as info:
            parse_poset("poset x\nelements: a\ncovers:\n")
        assert (info.value.line, info.value.column) == (1, 7)

    def test_bad_label(self):
        with pytest.raises(ParseError, match=r"bad label 'b!'") as info:
            parse_poset("poset\nelements: a b!\ncovers:\n")
        assert (info.value.line, info.value.column) == (2, 13)

    def test_missing_covers(self):
        with pytest.raises(ParseError, match="missing covers: line") as info:
            parse_poset("poset\nelements: a\n")
        assert info.value.line == 3

    def test_bad_cover_token(self):
        with pytest.raises(ParseError, match=r"bad cover token 'a<' \(expected x<y\)") as info:
            parse_poset("poset\nelements: a\ncovers: a<\n")
        assert (info.value.line, info.value.column) == (3, 9)

    def test_extra_line(self):
        with pytest.raises(ParseError, match="unexpected extra line starting with 'junk'"):
            parse_poset("poset\nelements: a\ncovers:\njunk\n")

    def test_str_carries_position(self):
        err = ParseError("boom", 4, 7)
        assert str(err) == "line 4, column 7: boom"
        assert isinstance(err, ValueError)

    def test_order_errors_pass_through(self):
        with pytest.raises(PosetError, match="cycle"):
            parse_poset("poset\nelements: a b\ncovers: a<b b<a\n")
        with pytest.raises(PosetError, match="duplicate"):
            parse_poset("poset\nelements: a a\ncovers:\n")


class TestParseTolerance:
    def test_blocks_form(self, fig1):
        rel = parse_tolerance("tolerance\nblocks: {0,a} {a,b} {c,e} {d,g} {f,1}\n", fig1.poset)
        assert rel == fig1.t.rel

    def test_pairs_form_equivalent(self):
        p = build_poset(["0", "a", "1"], [("0", "a"), ("a", "1")])
        via_blocks = parse_tolerance("tolerance\nblocks: {0,a} {a,1}\n", p)
        via_pairs = parse_tolerance("tolerance\npairs: 0~a a~1\n", p)
        assert via_blocks == via_pairs

    def test_empty_body_is_diagonal(self):
        p = build_poset(["x", "y"], [])
        assert parse_tolerance("tolerance\nblocks:\n", p) == Relation.identity(2)
        assert parse_tolerance("tolerance\npairs:\n", p) == Relation.identity(2)

    def test_singleton_block(self):
        p = build_poset(["x", "y"], [])
        assert parse_tolerance("tolerance\nblocks: {x}\n", p) == Relation.identity(2)

    def test_wide_block_squares(self):
        p = build_poset(["0", "a", "1"], [("0", "a"), ("a", "1")])
        rel = parse_tolerance("tolerance\nblocks: {0,a,1}\n", p)
        assert rel == Relation.full(3)

    def test_not_validated(self):
        """The parser returns a raw relation; axiom checking is separate."""
        p = build_poset(["0", "a", "1"], [("0", "a"), ("a", "1")])
        rel = parse_tolerance("tolerance\npairs: 0~1\n", p)
        assert rel.has(0, 2) and rel.has(2, 0)
        assert not check_tolerance(p, rel).holds


class TestParseToleranceErrors:
    @pytest.fixture()
    def chain(self):
        return build_poset(["0", "a", "1"], [("0", "a"), ("a", "1")])

    def test_wrong_header(self, chain):
        with pytest.raises(ParseError, match="expected tolerance, got 'poset'"):
            parse_tolerance("poset\nblocks:\n", chain)

    def test_wrong_body_keyword(self, chain):
        with pytest.raises(ParseError, match="expected blocks: or pairs:, got 'cover:'"):
            parse_tolerance("tolerance\ncover: {0,a}\n", chain)

    def test_bad_block_token(self, chain):
        with pytest.raises(ParseError, match=r"bad block token '\{0,a' ") as info:
            parse_tolerance("tolerance\nblocks: {0,a\n", chain)
        assert (info.value.line, info.value.column) == (2, 9)

    def test_block_with_space_splits(self, chain):
        with pytest.raises(ParseError, match=r"bad block token '\{0,'"):
            parse_tolerance("tolerance\nblocks: {0, a}\n", chain)

    def test_bad_pair_token(self, chain):
        with pytest.raises(ParseError, match=r"bad pair token 'a~' \(expected x~y\)"):
            parse_tolerance("tolerance\npairs: a~\n", chain)

    def test_unknown_label(self, chain):
        with pytest.raises(ParseError, match="unknown label 'q'") as info:
            parse_tolerance("tolerance\nblocks: {0,q}\n", chain)
        assert (info.value.line, info.value.column) == (2, 9)

    def test_extra_line(self, chain):
        with pytest.raises(ParseError, match="unexpected extra line"):
            parse_tolerance("tolerance\nblocks: {0,a}\nblocks: {a,1}\n", chain)

    def test_missing_body(self, chain):
        with pytest.raises(ParseError, match="missing blocks: or pairs: line"):
            parse_tolerance("tolerance\n", chain)


class TestRoundTrips:
    def test_poset_text_exact(self):
        p = build_poset(["0", "a", "1"], [("0", "a"), ("a", "1")])
        assert poset_to_text(p) == "poset\nelements: 0 a 1\ncovers: 0<a a<1\n"

    def test_tolerance_text_exact(self, fig1):
        assert tolerance_to_text(fig1.t) == \
            "tolerance\nblocks: {0,a} {a,b} {c,e} {d,g} {f,1}\n"

    def test_poset_round_trip(self, fig1, fig2, fig3):
        posets = [fig1.poset, fig2.poset, fig3.poset] + list(PosetCorpus(3))
        for p in posets:
            assert parse_poset(poset_to_text(p)) == p

    def test_tolerance_round_trip(self, fig1, fig2, fig3):
        cases = [(e.poset, t) for e in (fig1, fig2, fig3) for t in (e.t, e.s)]
        for p in PosetCorpus(3):
            cases.extend((p, t) for t in enumerate_2uniform(p))
        for p, t in cases:
            assert parse_tolerance(tolerance_to_text(t), p) == t.rel
