"""Iterated Q-labeled forests: terms, the homomorphism quasiorder, section and
retraction operators, and finite degree posets."""

from .errors import (
    EnumerationLimitError,
    ForestCalcError,
    KindError,
    LevelError,
    ParseError,
    QOError,
    UndeclaredLabelError,
    ValidationError,
)
from .explore import DegreePoset, enumerate_terms, hasse_dot, quotient, report
from .hcalc import equiv_h, is_join_irreducible, leq_h
from .oracle import LabeledForest, hom_leq, to_labeled_forest
from .ordinals import Ordinal, Ordering, add, compare, parse_ordinal, summands
from .qo import QOrder, dominates, dump_qo, leq_q, load_qo, make_qo
from .terms import Dot, Forest, Label, SApp, Term, canonicalize, in_level, node_count, parse_term, print_term
from .transforms import apply_r, apply_r_star, apply_s, apply_s_star, leq_h_xi

__all__ = [
    "DegreePoset",
    "Dot",
    "EnumerationLimitError",
    "Forest",
    "ForestCalcError",
    "KindError",
    "Label",
    "LabeledForest",
    "LevelError",
    "Ordinal",
    "Ordering",
    "ParseError",
    "QOError",
    "QOrder",
    "SApp",
    "Term",
    "UndeclaredLabelError",
    "ValidationError",
    "add",
    "apply_r",
    "apply_r_star",
    "apply_s",
    "apply_s_star",
    "canonicalize",
    "compare",
    "dominates",
    "dump_qo",
    "enumerate_terms",
    "equiv_h",
    "hasse_dot",
    "hom_leq",
    "in_level",
    "is_join_irreducible",
    "leq_h",
    "leq_h_xi",
    "leq_q",
    "load_qo",
    "make_qo",
    "node_count",
    "parse_ordinal",
    "parse_term",
    "print_term",
    "quotient",
    "report",
    "summands",
    "to_labeled_forest",
]
