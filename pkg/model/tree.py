"""
Decision trees over a feature schema.

Nodes are stored as a tuple sorted by id; internal nodes carry the tested
feature and their outgoing edges (one literal on that feature each), leaves
carry a class label. Structural well-formedness (references, single
parents, reachability, labels) is enforced on construction; semantic
conditions (disjoint/covering edges, consistent paths) live in
`model.validation`.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence, Union

from model.assignment import PartialAssignment, Schema
from model.errors import PreconditionError, StructuralError
from model.literals import Literal


@dataclass(frozen=True)
class Edge:
    literal: Literal
    child: int


@dataclass(frozen=True)
class InternalNode:
    id: int
    feature: int
    edges: tuple

    is_leaf = False


@dataclass(frozen=True)
class LeafNode:
    id: int
    label: str

    is_leaf = True


Node = Union[InternalNode, LeafNode]


@dataclass(frozen=True)
class Path:
    """Root-to-leaf node sequence with its literals and leaf label."""

    index: int
    nodes: tuple
    literals: PartialAssignment
    label: str

    @property
    def domains(self) -> dict:
        return self.literals.domains

    @property
    def leaf(self) -> int:
        return self.nodes[-1]

    def __len__(self) -> int:
        return len(self.nodes)

    def __str__(self) -> str:
        route = ",".join(str(n) for n in self.nodes)
        return f"P{self.index + 1}=<{route}> {self.literals} -> {self.label}"


@dataclass(frozen=True)
class DecisionTree:
    schema: Schema
    classes: tuple
    nodes: tuple
    root: int

    def __post_init__(self):
        object.__setattr__(self, 'classes', tuple(str(c) for c in self.classes))
        object.__setattr__(self, 'nodes', tuple(sorted(self.nodes, key=lambda n: n.id)))
        self._check_structure()

    def _check_structure(self) -> None:
        if len(set(self.classes)) != len(self.classes):
            raise StructuralError("duplicated class labels")
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise StructuralError("duplicated node ids")
        known = set(ids)
        if self.root not in known:
            raise StructuralError(f"root {self.root} is not a node")

        parents: dict = {}
        for node in self.nodes:
            if node.is_leaf:
                if node.label not in self.classes:
                    raise StructuralError(
                        f"node {node.id}: class {node.label!r} absent from classes list")
                continue
            self.schema.feature(node.feature)
            for edge in node.edges:
                if edge.child not in known:
                    raise StructuralError(f"node {node.id}: edge to unknown node {edge.child}")
                if edge.literal.feature_id != node.feature:
                    raise StructuralError(
                        f"node {node.id}: edge literal {edge.literal} is not on feature {node.feature}")
                if edge.child in parents:
                    raise StructuralError(
                        f"node {edge.child} has two parents ({parents[edge.child]}, {node.id})")
                parents[edge.child] = node.id
        if self.root in parents:
            raise StructuralError(f"root {self.root} has a parent")

        seen = set()
        stack = [self.root]
        while stack:
            nid = stack.pop()
            seen.add(nid)
            node = self.node(nid)
            if not node.is_leaf:
                stack.extend(e.child for e in node.edges)
        unreachable = known - seen
        if unreachable:
            raise StructuralError(f"nodes unreachable from root: {sorted(unreachable)}")

    @cached_property
    def node_map(self) -> dict:
        return {n.id: n for n in self.nodes}

    def node(self, node_id: int) -> Node:
        try:
            return self.node_map[node_id]
        except KeyError:
            raise StructuralError(f"unknown node {node_id}")

    @cached_property
    def parents(self) -> dict:
        out = {}
        for n in self.nodes:
            if not n.is_leaf:
                for e in n.edges:
                    out[e.child] = n.id
        return out

    def parent(self, node_id: int) -> Optional[int]:
        return self.parents.get(node_id)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def feature_count(self) -> int:
        return len(self.schema)

    @property
    def leaves(self) -> list:
        return [n for n in self.nodes if n.is_leaf]

    @cached_property
    def paths(self) -> list:
        return paths_of(self)

    def paths_with_label(self, label: str) -> list:
        return [p for p in self.paths if p.label == label]

    def depth(self) -> int:
        return max(len(p.nodes) for p in self.paths) - 1

    def predict(self, values: Sequence) -> str:
        """Label for a complete point given as values in feature-id order."""
        node = self.node(self.root)
        while not node.is_leaf:
            v = values[node.feature - 1]
            for edge in node.edges:
                if edge.literal.domain.contains(v):
                    node = self.node(edge.child)
                    break
            else:
                raise PreconditionError(
                    f"node {node.id}: no edge admits {self.schema.feature(node.feature).name}={v!r}")
        return node.label

    def with_nodes(self, nodes, root: Optional[int] = None) -> 'DecisionTree':
        return DecisionTree(self.schema, self.classes, tuple(nodes),
                            self.root if root is None else root)

    def iter_internal(self) -> Iterator[InternalNode]:
        return (n for n in self.nodes if not n.is_leaf)


def paths_of(tree: DecisionTree) -> list:
    """All root-to-leaf paths, depth-first with edges in stored order."""
    out = []
    stack = [(tree.root, (), ())]
    while stack:
        nid, route, lits = stack.pop()
        route = route + (nid,)
        node = tree.node(nid)
        if node.is_leaf:
            out.append(Path(len(out), route, PartialAssignment(tree.schema, lits), node.label))
            continue
        for edge in reversed(node.edges):
            stack.append((edge.child, route, lits + (edge.literal,)))
    return out


def classify(tree: DecisionTree, point: PartialAssignment) -> str:
    """Label of the unique path consistent with a complete point.

    Raises:
        PreconditionError: the point is not complete.
    """
    if not point.is_complete:
        raise PreconditionError(f"classify needs a complete point, got {point}")
    return tree.predict(point.values())
