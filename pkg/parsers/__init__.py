"""Parsers module: tree and assignment documents, inline assignment shorthand."""

from .assignment_parser import (
    load_assignment,
    load_json,
    load_point,
    load_tree,
    parse_inline_assignment,
    parse_point_values,
)

__all__ = [
    'load_assignment',
    'load_json',
    'load_point',
    'load_tree',
    'parse_inline_assignment',
    'parse_point_values',
]
