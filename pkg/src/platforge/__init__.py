"""Braid doubling, circular plat closures and hyperelliptic monodromy tools."""

__version__ = "0.1.0"

from .braids import (
    BraidWord,
    Permutation,
    braid_equal,
    family_b,
    is_skew_palindromic,
    parse_braid,
    skew,
    tilde,
    underlying_permutation,
)
from .diagrams import (
    LinkDiagram,
    circular_plat_diagram,
    closure_diagram,
    component_count,
    embed_for_plat,
)
from .invariants import (
    alexander_polynomial,
    determinant,
    double_cover_homology,
    invariant_report,
    kauffman_bracket,
    normalized_bracket,
)
from .reidemeister import certify_unknot, simplify
from .representations import (
    burau_reduced,
    mapping_torus_homology,
    symplectic_action,
    twist_word,
)
from .spectral import homological_dilatation

__all__ = [
    "alexander_polynomial",
    "burau_reduced",
    "determinant",
    "double_cover_homology",
    "homological_dilatation",
    "invariant_report",
    "kauffman_bracket",
    "mapping_torus_homology",
    "normalized_bracket",
    "symplectic_action",
    "twist_word",
    "BraidWord",
    "LinkDiagram",
    "Permutation",
    "braid_equal",
    "certify_unknot",
    "circular_plat_diagram",
    "closure_diagram",
    "component_count",
    "embed_for_plat",
    "family_b",
    "is_skew_palindromic",
    "parse_braid",
    "simplify",
    "skew",
    "tilde",
    "underlying_permutation",
]
