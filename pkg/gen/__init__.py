"""Tree generators: worst-case gadgets, running examples, random trees and variants."""

from .builder import Leaf, Split, boolean_split, build_tree
from .families import (
    BINARY_CLASSES,
    EXAMPLE_FUNCTION_MINTERMS,
    GadgetParams,
    boolean_schema,
    example_function_trees,
    full_tree,
    running_examples,
    worst_case,
)
from .random_trees import equivalent_variant, longest_path_assignment, mutate_leaf, random_tree

__all__ = [
    'Leaf', 'Split', 'boolean_split', 'build_tree',
    'BINARY_CLASSES', 'EXAMPLE_FUNCTION_MINTERMS', 'GadgetParams', 'boolean_schema',
    'example_function_trees', 'full_tree', 'running_examples', 'worst_case',
    'equivalent_variant', 'longest_path_assignment', 'mutate_leaf', 'random_tree',
]
