"""Brute-force oracles over enumerable feature spaces."""

from .space import DEFAULT_POINT_CAP, EnumerableSpace
from .brute import (
    brute_all_axps,
    brute_counterexample,
    brute_equivalent,
    brute_is_waxp,
    brute_path_partition,
)

__all__ = [
    'DEFAULT_POINT_CAP',
    'EnumerableSpace',
    'brute_all_axps',
    'brute_counterexample',
    'brute_equivalent',
    'brute_is_waxp',
    'brute_path_partition',
]
