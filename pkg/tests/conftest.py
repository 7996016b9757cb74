"""Shared fixtures: the worked examples and cached corpora."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import pytest

from posetol import (
    Poset,
    PosetCorpus,
    Tolerance,
    TolerancePair,
    enumerate_2uniform,
    parse_poset,
    parse_tolerance,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


@dataclass(frozen=True)
class Example:
    poset: Poset
    t: Tolerance
    s: Tolerance

    @property
    def pair(self) -> TolerancePair:
        return TolerancePair(self.t, self.s)


def load_example(stem: str) -> Example:
    poset = parse_poset((FIXTURES / f"{stem}.poset").read_text())
    t = Tolerance.validate(poset, parse_tolerance((FIXTURES / f"{stem}_T.tol").read_text(), poset))
    s = Tolerance.validate(poset, parse_tolerance((FIXTURES / f"{stem}_S.tol").read_text(), poset))
    return Example(poset, t, s)


@pytest.fixture(scope="session")
def fig1() -> Example:
    return load_example("fig1")


@pytest.fixture(scope="session")
def fig2() -> Example:
    return load_example("fig2")


@pytest.fixture(scope="session")
def fig3() -> Example:
    return load_example("fig3")


@pytest.fixture(scope="session")
def corpus4() -> list[Poset]:
    return list(PosetCorpus(4))


@pytest.fixture(scope="session")
def corpus5() -> list[Poset]:
    return list(PosetCorpus(5))


@pytest.fixture(scope="session")
def enum5(corpus5) -> list[tuple[Poset, list[Tolerance]]]:
    return [(p, enumerate_2uniform(p)) for p in corpus5]


@pytest.fixture(scope="session")
def enum6() -> list[tuple[Poset, list[Tolerance]]]:
    return [(p, enumerate_2uniform(p)) for p in PosetCorpus(6)]


@pytest.fixture(scope="session")
def golden() -> dict:
    return json.loads((GOLDEN / "corpus.json").read_text())
