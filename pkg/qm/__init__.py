"""Quine-McCluskey baseline: class terms, Blake canonical form and minimum covers."""

from .terms import ClassDnf, DnfKind, Term, class_terms, point_to_minterm
from .bcf import DEFAULT_TERM_CAP, FIFO, LIFO, bcf
from .cover import (
    DEFAULT_FEATURE_CAP,
    LEX_HIGH,
    LEX_LOW,
    CostModel,
    CoverProblem,
    TieBreak,
    all_minimum_covers,
    count_minimum_covers,
    minimize,
)
from .compare import bcf_equivalence, qm_equivalence

__all__ = [
    'ClassDnf', 'DnfKind', 'Term', 'class_terms', 'point_to_minterm',
    'DEFAULT_TERM_CAP', 'FIFO', 'LIFO', 'bcf',
    'DEFAULT_FEATURE_CAP', 'LEX_HIGH', 'LEX_LOW', 'CostModel', 'CoverProblem', 'TieBreak',
    'all_minimum_covers', 'count_minimum_covers', 'minimize',
    'bcf_equivalence', 'qm_equivalence',
]
