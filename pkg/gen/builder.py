"""Nested tree blueprints and their conversion to `DecisionTree` with breadth-first ids."""

from collections import deque
from dataclasses import dataclass, field
from typing import Union

from model.assignment import Schema
from model.literals import Literal, Operator, make_literal
from model.tree import DecisionTree, Edge, InternalNode, LeafNode


@dataclass
class Leaf:
    label: str


@dataclass
class Split:
    """Internal node blueprint; each branch condition is a Literal or an EQ value."""

    feature: int
    branches: list = field(default_factory=list)


Blueprint = Union[Leaf, Split]


def boolean_split(feature: int, on_zero: Blueprint, on_one: Blueprint) -> Split:
    return Split(feature, [(0, on_zero), (1, on_one)])


def build_tree(schema: Schema, classes, root: Blueprint) -> DecisionTree:
    """Number the blueprint breadth-first from 1 and build the tree."""
    ids = {}
    order = []
    queue = deque([root])
    while queue:
        draft = queue.popleft()
        ids[id(draft)] = len(order) + 1
        order.append(draft)
        if isinstance(draft, Split):
            queue.extend(child for _, child in draft.branches)

    nodes = []
    for draft in order:
        nid = ids[id(draft)]
        if isinstance(draft, Leaf):
            nodes.append(LeafNode(nid, str(draft.label)))
            continue
        feature = schema.feature(draft.feature)
        edges = []
        for condition, child in draft.branches:
            literal = condition if isinstance(condition, Literal) \
                else make_literal(feature, Operator.EQ, condition)
            edges.append(Edge(literal, ids[id(child)]))
        nodes.append(InternalNode(nid, draft.feature, tuple(edges)))
    return DecisionTree(schema, tuple(classes), tuple(nodes), 1)
