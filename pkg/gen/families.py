"""
Fixed tree families: the worst-case gadget chain, the three two-feature
running examples, and two full trees for a four-variable function with
two distinct minimum DNFs.
"""

from dataclasses import dataclass

from gen.builder import Leaf, Split, boolean_split, build_tree
from model.assignment import Schema
from model.domains import DomainKind, FeatureSchema
from model.tree import DecisionTree

BINARY_CLASSES = ("0", "1")

# x1 is bit 0 of the minterm index, so x4 is the most significant bit
EXAMPLE_FUNCTION_MINTERMS = frozenset({0, 1, 5, 7, 8, 10, 14, 15})


def boolean_schema(m: int, prefix: str = "x") -> Schema:
    return Schema(tuple(FeatureSchema(i, f"{prefix}{i}", DomainKind.BOOLEAN) for i in range(1, m + 1)))


@dataclass(frozen=True)
class GadgetParams:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"gadget repetitions must be >= 1, got {self.r}")

    @property
    def features(self) -> int:
        return 2 * self.r + 1

    @property
    def nodes(self) -> int:
        return 6 * self.r + 3


def worst_case(r: int) -> DecisionTree:
    """Chain of r main gadgets closed by a final gadget.

    Main gadget k tests x_{2k-1}. Its 0-branch tests x_{2k} with leaves
    0 and 1; its 1-branch tests x_{2k} with leaf 1 on 0 and the next gadget
    on 1. The final gadget tests x_{2r+1} with leaves 0 and 1. The tree has
    6r+3 nodes over 2r+1 features, and the all-ones point is classified 1.
    """
    params = GadgetParams(r)
    tail = boolean_split(params.features, Leaf("0"), Leaf("1"))
    for k in range(r, 0, -1):
        a, b = 2 * k - 1, 2 * k
        low = boolean_split(b, Leaf("0"), Leaf("1"))
        high = boolean_split(b, Leaf("1"), tail)
        tail = boolean_split(a, low, high)
    return build_tree(boolean_schema(params.features), BINARY_CLASSES, tail)


def running_examples() -> tuple:
    """(T1, T2, T3) over x1, x2; T1 and T2 are equivalent, T3 is not."""
    schema = boolean_schema(2)
    t1 = build_tree(schema, BINARY_CLASSES, boolean_split(
        1, boolean_split(2, Leaf("0"), Leaf("1")), Leaf("1")))
    t2 = build_tree(schema, BINARY_CLASSES, boolean_split(
        2, boolean_split(1, Leaf("0"), Leaf("1")), Leaf("1")))
    t3 = build_tree(schema, BINARY_CLASSES, boolean_split(
        1, boolean_split(2, Leaf("1"), Leaf("0")), Leaf("1")))
    return t1, t2, t3


def full_tree(schema: Schema, order: list, minterms: frozenset) -> DecisionTree:
    """Complete evaluation tree testing `order` level by level."""

    def grow(depth: int, fixed: int) -> Split:
        fid = order[depth]
        children = []
        for value in (0, 1):
            point = fixed | (value << (fid - 1))
            if depth + 1 == len(order):
                children.append(Leaf("1" if point in minterms else "0"))
            else:
                children.append(grow(depth + 1, point))
        return Split(fid, [(0, children[0]), (1, children[1])])

    return build_tree(schema, BINARY_CLASSES, grow(0, 0))


def example_function_trees() -> tuple:
    """Two full trees for the same four-variable function, x1-first and x4-first."""
    schema = boolean_schema(4)
    return (full_tree(schema, [1, 2, 3, 4], EXAMPLE_FUNCTION_MINTERMS),
            full_tree(schema, [4, 3, 2, 1], EXAMPLE_FUNCTION_MINTERMS))
