"""Exact anthyphairesis over naturals and quadratic surds.

Reciprocal subtraction of two magnitudes yields a quotient sequence:
finite exactly when the magnitudes are commensurable, and eventually
periodic for ratios in a real quadratic field, where periodicity is
detected by an exact repeat of a remainder-ratio state.  On top of
that sit convergents and side-and-diameter approximants, ratio-class
counting (dialectic numbers), and a checker for binary division
schemes annotated with ratio equalities.
"""

from .approximants import Convergent, convergents, pell_values, side_diameter
from .dialectic import (
    FiniteExpansionError,
    RatioState,
    dialectic_number_exp,
    dialectic_number_seq,
    ratio_states,
    remainder_classes,
    tma_regress,
)
from .division import (
    DeclCheck,
    DivisionNode,
    DivisionTree,
    LogosDecl,
    LogosReport,
    TreeParseError,
    check_logos,
    parse_tree,
    render_tree,
)
from .expansion import (
    DEFAULT_MAX_STEPS,
    Expansion,
    Trace,
    anth_pair,
    canonical_expansion,
    euclid_anth,
    is_commensurable,
    proportion_eq,
    surd_anth,
)
from .surds import FieldMismatchError, QuadraticSurd, SurdState, isqrt, parse_surd

__version__ = "0.1.0"

__all__ = [
    "Convergent",
    "DeclCheck",
    "DivisionNode",
    "DivisionTree",
    "Expansion",
    "FieldMismatchError",
    "FiniteExpansionError",
    "LogosDecl",
    "LogosReport",
    "QuadraticSurd",
    "RatioState",
    "SurdState",
    "Trace",
    "TreeParseError",
    "DEFAULT_MAX_STEPS",
    "anth_pair",
    "canonical_expansion",
    "check_logos",
    "convergents",
    "dialectic_number_exp",
    "dialectic_number_seq",
    "euclid_anth",
    "is_commensurable",
    "isqrt",
    "parse_surd",
    "parse_tree",
    "pell_values",
    "proportion_eq",
    "ratio_states",
    "remainder_classes",
    "render_tree",
    "side_diameter",
    "surd_anth",
    "tma_regress",
]
