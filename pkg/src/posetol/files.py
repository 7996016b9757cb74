"""Text formats for posets and tolerances.

Poset files:

    poset
    elements: 0 a b 1
    covers: 0<a a<b b<1

Tolerance files (relative to a companion poset; diagonal implied):

    tolerance
    blocks: {0,a} {a,b}

or with explicit symmetric pairs:

    tolerance
    pairs: 0~a a~b

Blank lines are skipped and ``#`` starts a comment anywhere on a line.
Labels are nonempty strings over [A-Za-z0-9_].
"""

from __future__ import annotations

import re

from .order import Poset, build_poset
from .relation import Relation
from .tolerance import Tolerance

_COVER_RE = re.compile(r"([A-Za-z0-9_]+)<([A-Za-z0-9_]+)\Z")
_PAIR_RE = re.compile(r"([A-Za-z0-9_]+)~([A-Za-z0-9_]+)\Z")
_BLOCK_RE = re.compile(r"\{([A-Za-z0-9_]+(?:,[A-Za-z0-9_]+)*)\}\Z")


class ParseError(ValueError):
    """Malformed poset or tolerance text, with 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _token_lines(text: str) -> list[list[tuple[str, int, int]]]:
    """Nonblank lines as lists of (token, line, column), comments stripped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), lineno, m.start() + 1) for m in re.finditer(r"\S+", content)]
        if tokens:
            out.append(tokens)
    return out


def _expect_section(lines: list[list[tuple[str, int, int]]], index: int,
                    keywords: tuple[str, ...]) -> list[tuple[str, int, int]]:
    if index >= len(lines):
        raise ParseError(f"missing {' or '.join(keywords)} line", index + 1, 1)
    tok, line, col = lines[index][0]
    if tok not in keywords:
        raise ParseError(f"expected {' or '.join(keywords)}, got {tok!r}", line, col)
    return lines[index]


def parse_poset(text: str) -> Poset:
    """Parse poset text; raises ParseError for format problems and
    PosetError when the described order is not a poset."""
    lines = _token_lines(text)
    header = _expect_section(lines, 0, ("poset",))
    if len(header) > 1:
        tok, line, col = header[1]
        raise ParseError(f"unexpected token {tok!r} after header", line, col)
    elements = _expect_section(lines, 1, ("elements:",))
    labels = []
    for tok, line, col in elements[1:]:
        if not re.fullmatch(r"[A-Za-z0-9_]+", tok):
            raise ParseError(f"bad label {tok!r}", line, col)
        labels.append(tok)
    covers_line = _expect_section(lines, 2, ("covers:",))
    pairs = []
    for tok, line, col in covers_line[1:]:
        m = _COVER_RE.match(tok)
        if not m:
            raise ParseError(f"bad cover token {tok!r} (expected x<y)", line, col)
        pairs.append((m.group(1), m.group(2)))
    if len(lines) > 3:
        tok, line, col = lines[3][0]
        raise ParseError(f"unexpected extra line starting with {tok!r}", line, col)
    return build_poset(labels, pairs)


def parse_tolerance(text: str, poset: Poset) -> Relation:
    """Parse tolerance text against a poset's labels into a raw relation.

    The result is reflexive and symmetric by construction but not
    otherwise validated; run check_tolerance or Tolerance.validate on it.
    """
    lines = _token_lines(text)
    header = _expect_section(lines, 0, ("tolerance",))
    if len(header) > 1:
        tok, line, col = header[1]
        raise ParseError(f"unexpected token {tok!r} after header", line, col)
    body = _expect_section(lines, 1, ("blocks:", "pairs:"))
    if len(lines) > 2:
        tok, line, col = lines[2][0]
        raise ParseError(f"unexpected extra line starting with {tok!r}", line, col)

    known = set(poset.labels)

    def idx(lab: str, line: int, col: int) -> int:
        if lab not in known:
            raise ParseError(f"unknown label {lab!r} (not among the poset's elements)", line, col)
        return poset.index(lab)

    rows = [1 << i for i in range(poset.n)]
    kind = body[0][0]
    for tok, line, col in body[1:]:
        if kind == "blocks:":
            m = _BLOCK_RE.match(tok)
            if not m:
                raise ParseError(f"bad block token {tok!r} (expected {{x,y,...}})", line, col)
            members = 0
            for lab in m.group(1).split(","):
                members |= 1 << idx(lab, line, col)
            for i in range(poset.n):
                if members >> i & 1:
                    rows[i] |= members
        else:
            m = _PAIR_RE.match(tok)
            if not m:
                raise ParseError(f"bad pair token {tok!r} (expected x~y)", line, col)
            a = idx(m.group(1), line, col)
            b = idx(m.group(2), line, col)
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Relation(poset.n, tuple(rows))


def poset_to_text(poset: Poset) -> str:
    covers = " ".join(
        f"{poset.labels[a]}<{poset.labels[b]}" for a, b in poset.covers
    )
    return (
        "poset\n"
        f"elements: {' '.join(poset.labels)}\n"
        f"covers: {covers}\n"
    )


def tolerance_to_text(tolerance: Tolerance) -> str:
    blocks = " ".join("{%s}" % ",".join(b) for b in tolerance.block_labels())
    return f"tolerance\nblocks: {blocks}\n"
