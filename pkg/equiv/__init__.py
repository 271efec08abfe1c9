"""Predictive-equivalence checks for decision trees."""

from .decide import (
    CONSISTENT,
    INCONSISTENT,
    SAME_CLASS,
    EquivVerdict,
    NonEquivalenceCertificate,
    Witness,
    check_comparable,
    conflict_matrix,
    decide,
    disprove_by_axps,
)

__all__ = [
    'CONSISTENT',
    'INCONSISTENT',
    'SAME_CLASS',
    'EquivVerdict',
    'NonEquivalenceCertificate',
    'Witness',
    'check_comparable',
    'conflict_matrix',
    'decide',
    'disprove_by_axps',
]
