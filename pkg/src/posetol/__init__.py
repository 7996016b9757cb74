"""posetol: tolerances on finite posets.

Decides whether a relation is a tolerance (axioms (1)-(4)), whether it
is 2-uniform, whether two 2-uniform tolerances are amicable (conditions
(5)-(8)) and whether they permute, and exhaustively verifies that the
last two agree over corpora of all small posets.
"""

from .amicability import BottomTopClass, ElementFlags, TolerancePair
from .enumeration import (
    MAX_N_CAP,
    Counterexample,
    PosetCorpus,
    TheoremReport,
    brute_force_2uniform,
    canonical_key,
    enumerate_2uniform,
    find_pairs,
    generate_posets,
    strict_pattern,
    verify_theorem,
)
from .files import ParseError, parse_poset, parse_tolerance, poset_to_text, tolerance_to_text
from .order import Poset, PosetError, build_poset
from .relation import Relation
from .tolerance import NeighborMap, Tolerance, ToleranceError, Verdict, check_tolerance

__version__ = "0.1.0"

__all__ = [
    "BottomTopClass",
    "Counterexample",
    "ElementFlags",
    "MAX_N_CAP",
    "NeighborMap",
    "ParseError",
    "Poset",
    "PosetCorpus",
    "PosetError",
    "Relation",
    "TheoremReport",
    "Tolerance",
    "ToleranceError",
    "TolerancePair",
    "Verdict",
    "brute_force_2uniform",
    "build_poset",
    "canonical_key",
    "check_tolerance",
    "enumerate_2uniform",
    "find_pairs",
    "generate_posets",
    "parse_poset",
    "parse_tolerance",
    "poset_to_text",
    "strict_pattern",
    "tolerance_to_text",
    "verify_theorem",
]
