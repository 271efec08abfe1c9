"""Polynomial-time explanation queries on decision trees."""

from .waxp import (
    WaxpVerdict,
    all_waxp_classes,
    is_waxp_for_class,
    is_waxp_some_class,
    path_consistent,
    predict_with_missing,
)
from .axp import deletion_order, explain_instance, find_one_axp, is_axp, path_of

__all__ = [
    'WaxpVerdict',
    'all_waxp_classes',
    'deletion_order',
    'explain_instance',
    'find_one_axp',
    'is_axp',
    'is_waxp_for_class',
    'is_waxp_some_class',
    'path_consistent',
    'path_of',
    'predict_with_missing',
]
