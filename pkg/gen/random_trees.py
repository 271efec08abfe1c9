"""
Seeded random trees and tree transformations for property testing.

Every split partitions the domain left open by the path so far, so
generated trees satisfy node-local disjointness and coverage by
construction. `equivalent_variant` rewrites a tree without changing its
classification function; `mutate_leaf` changes exactly one leaf.
"""

import random
from typing import Optional

from gen.builder import Leaf, Split, build_tree
from model.assignment import PartialAssignment, Schema
from model.domains import DomainKind, DomainSubset
from model.errors import PedtError
from model.literals import Operator, make_literal
from model.tree import DecisionTree, Edge, InternalNode, LeafNode


def _splittable(dom: DomainSubset) -> bool:
    if dom.feature.is_valued or dom.feature.kind == DomainKind.ORDINAL_INT:
        return dom.size() >= 2
    return dom.intervals[0].lo < dom.intervals[-1].hi


def _partition(rng: random.Random, dom: DomainSubset) -> list:
    """Literals splitting `dom` into two or more disjoint covering parts."""
    f = dom.feature
    if f.is_valued:
        values = list(dom.iter_values())
        rng.shuffle(values)
        parts = rng.randint(2, min(3, len(values)))
        cuts = sorted(rng.sample(range(1, len(values)), parts - 1))
        groups = [values[i:j] for i, j in zip([0] + cuts, cuts + [len(values)])]
        return [make_literal(f, Operator.IN, g) for g in groups]
    if f.kind == DomainKind.ORDINAL_INT:
        values = list(dom.iter_values())
        cut = values[rng.randrange(len(values) - 1)]
    else:
        lo, hi = dom.intervals[0].lo, dom.intervals[-1].hi
        cut = round(lo + (hi - lo) * rng.uniform(0.1, 0.9), 3)
        if not lo < cut < hi:
            cut = (lo + hi) / 2
    return [make_literal(f, Operator.LE, cut), make_literal(f, Operator.GT, cut)]


def _grow(rng: random.Random, schema: Schema, classes: tuple, domains: dict,
          depth: int, leaf_prob: float, at_root: bool):
    candidates = [f for f in schema if _splittable(domains.get(f.id) or DomainSubset.full(f))]
    if depth == 0 or not candidates or (not at_root and rng.random() < leaf_prob):
        return Leaf(rng.choice(classes))
    feature = rng.choice(candidates)
    current = domains.get(feature.id) or DomainSubset.full(feature)
    branches = []
    for literal in _partition(rng, current):
        child_domains = dict(domains)
        child_domains[feature.id] = current.intersect(literal.domain)
        branches.append((literal, _grow(rng, schema, classes, child_domains, depth - 1, leaf_prob, False)))
    return Split(feature.id, branches)


def random_tree(schema: Schema, depth: int, seed: int, classes=("0", "1"),
                leaf_prob: float = 0.2) -> DecisionTree:
    """Random valid tree of at most `depth` levels, deterministic in `seed`."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    rng = random.Random(seed)
    classes = tuple(str(c) for c in classes)
    root = _grow(rng, schema, classes, {}, depth, leaf_prob, True)
    return build_tree(schema, classes, root)


def _leaf_order(tree: DecisionTree) -> list:
    """Leaf paths, deepest first, later paths first among equals."""
    return sorted(tree.paths, key=lambda p: (len(p.nodes), p.index), reverse=True)


def mutate_leaf(tree: DecisionTree, node_id: Optional[int] = None) -> DecisionTree:
    """Give one leaf the next class label (cyclically in `classes`).

    Defaults to the deepest leaf, the later one in path order on ties.
    """
    if len(tree.classes) < 2:
        raise PedtError("cannot mutate a leaf of a single-class tree")
    if node_id is None:
        node_id = _leaf_order(tree)[0].leaf
    leaf = tree.node(node_id)
    if not leaf.is_leaf:
        raise PedtError(f"node {node_id} is not a leaf")
    label = tree.classes[(tree.classes.index(leaf.label) + 1) % len(tree.classes)]
    nodes = [LeafNode(n.id, label) if n.id == node_id else n for n in tree.nodes]
    return tree.with_nodes(nodes)


def longest_path_assignment(tree: DecisionTree) -> PartialAssignment:
    """Literals of the longest path, the later one in path order on ties."""
    return _leaf_order(tree)[0].literals


def _expand_leaf(rng: random.Random, tree: DecisionTree, nodes: dict, leaf_id: int,
                 domains: dict, next_id: int) -> int:
    leaf = nodes[leaf_id]
    candidates = [f for f in tree.schema
                  if _splittable(domains.get(f.id) or DomainSubset.full(f))]
    if not candidates:
        return next_id
    feature = rng.choice(candidates)
    current = domains.get(feature.id) or DomainSubset.full(feature)
    edges = []
    for literal in _partition(rng, current):
        nodes[next_id] = LeafNode(next_id, leaf.label)
        edges.append(Edge(literal, next_id))
        next_id += 1
    nodes[leaf_id] = InternalNode(leaf_id, feature.id, tuple(edges))
    return next_id


def equivalent_variant(tree: DecisionTree, seed: int, steps: int = 3) -> DecisionTree:
    """Structurally different tree with the same classification function.

    Applies `steps` random rewrites: expanding a leaf into a split whose
    children all keep its label, merging a split whose children are leaves
    with one shared label, or reordering the edges of a split.
    """
    rng = random.Random(seed)
    for _ in range(steps):
        nodes = {n.id: n for n in tree.nodes}
        mergeable = [
            n for n in tree.iter_internal()
            if all(nodes[e.child].is_leaf for e in n.edges)
            and len({nodes[e.child].label for e in n.edges}) == 1
        ]
        move = rng.choice(["expand", "merge", "shuffle"] if mergeable else ["expand", "shuffle"])
        if move == "expand":
            path = rng.choice(tree.paths)
            _expand_leaf(rng, tree, nodes, path.leaf, dict(path.domains), max(nodes) + 1)
        elif move == "merge":
            target = rng.choice(mergeable)
            label = nodes[target.edges[0].child].label
            for e in target.edges:
                del nodes[e.child]
            nodes[target.id] = LeafNode(target.id, label)
        else:
            internal = list(tree.iter_internal())
            if not internal:
                continue
            target = rng.choice(internal)
            edges = list(target.edges)
            rng.shuffle(edges)
            nodes[target.id] = InternalNode(target.id, target.feature, tuple(edges))
        tree = tree.with_nodes(nodes.values())
    return tree
