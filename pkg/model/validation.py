"""
Semantic validation of decision trees.

Checks, node by node, that the edge literals of every internal node are
pairwise disjoint and jointly cover the tested feature's domain as
restricted by the path leading to the node, and that every root-to-leaf
path is consistent. Node-local disjointness and coverage imply that each
complete point is consistent with exactly one path.
"""

from dataclasses import dataclass, field
from itertools import combinations

from loguru import logger

from model.domains import DomainSubset
from model.tree import DecisionTree

ARITY = "arity"
DISJOINTNESS = "disjointness"
COVERAGE = "coverage"
INCONSISTENT_PATH = "inconsistent-path"


@dataclass(frozen=True)
class Violation:
    kind: str
    node: int
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] node {self.node}: {self.message}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def of_kind(self, kind: str) -> list:
        return [v for v in self.violations if v.kind == kind]

    def to_dict(self) -> dict:
        return {
            'ok': self.ok,
            'violations': [
                {'kind': v.kind, 'node': v.node, 'message': v.message}
                for v in self.violations
            ],
        }


def validate(tree: DecisionTree) -> ValidationReport:
    """Report disjointness, coverage, arity and path-consistency violations."""
    report = ValidationReport()
    # (node id, per-feature domains along the path so far)
    stack = [(tree.root, {})]
    while stack:
        nid, path_domains = stack.pop()
        node = tree.node(nid)
        if node.is_leaf:
            continue

        feature = tree.schema.feature(node.feature)
        current = path_domains.get(feature.id, DomainSubset.full(feature))
        if len(node.edges) < 2:
            report.violations.append(Violation(
                ARITY, nid, f"internal node has {len(node.edges)} child(ren), needs at least 2"))

        restricted = [e.literal.domain.intersect(current) for e in node.edges]
        for (i, a), (j, b) in combinations(enumerate(restricted), 2):
            if not a.disjoint(b):
                report.violations.append(Violation(
                    DISJOINTNESS, nid,
                    f"edges {node.edges[i].literal} and {node.edges[j].literal} overlap on {a.intersect(b)}"))

        covered = DomainSubset(feature, values=frozenset()) if feature.is_valued \
            else DomainSubset(feature, intervals=())
        for dom in restricted:
            covered = covered.union(dom)
        if not current.issubset(covered):
            report.violations.append(Violation(
                COVERAGE, nid,
                f"edges cover {covered} of {feature.name}'s path domain {current}"))

        for edge, dom in zip(node.edges, restricted):
            if dom.is_empty():
                report.violations.append(Violation(
                    INCONSISTENT_PATH, edge.child,
                    f"edge {edge.literal} contradicts the path to node {nid}"))
                continue
            child_domains = dict(path_domains)
            child_domains[feature.id] = dom
            stack.append((edge.child, child_domains))

    if report.ok:
        logger.debug(f"tree with {tree.node_count} nodes validated")
    else:
        logger.debug(f"tree validation found {len(report.violations)} violation(s)")
    return report
