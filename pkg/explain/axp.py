"""
Abductive explanations: one-AXp extraction by linear deletion.

Features are deleted one at a time (all literals of a feature together)
as long as the working assignment stays a WAXp. The incremental variant
keeps, for every opposing path, the set of features on which it clashes
with the working assignment; a feature may be dropped unless some opposing
path clashes on that feature alone.
"""

from typing import Iterable, Optional

from loguru import logger

from explain.waxp import (
    check_assignment,
    check_label,
    disjoint,
    domains_consistent,
    is_waxp_for_class,
)
from model.assignment import PartialAssignment
from model.errors import PedtError, PreconditionError
from model.tree import DecisionTree, Path, classify


def deletion_order(assignment: PartialAssignment, order: Optional[Iterable[int]] = None) -> list:
    """Feature ids of the assignment in deletion order.

    Ids from `order` that the assignment does not fix are skipped; fixed
    features missing from `order` follow in ascending id order.
    """
    fixed = assignment.features
    if order is None:
        return sorted(fixed)
    chosen = []
    for fid in order:
        fid = int(fid)
        if fid in fixed and fid not in chosen:
            chosen.append(fid)
    chosen.extend(sorted(fixed - set(chosen)))
    return chosen


class ConflictTable:
    """Clash sets of opposing paths against a working assignment."""

    def __init__(self, tree: DecisionTree, assignment: PartialAssignment, label: str):
        domains = assignment.domains
        self.counts: dict = {}
        self.by_feature: dict = {fid: [] for fid in domains}
        self.unblocked: Optional[Path] = None
        for path in tree.paths:
            if path.label == label:
                continue
            clashes = [fid for fid, dom in path.domains.items()
                       if fid in domains and disjoint(dom, domains[fid])]
            if not clashes and self.unblocked is None:
                self.unblocked = path
            self.counts[path.index] = len(clashes)
            for fid in clashes:
                self.by_feature[fid].append(path.index)

    def removable(self, fid: int) -> bool:
        return all(self.counts[i] != 1 for i in self.by_feature.get(fid, ()))

    def remove(self, fid: int) -> None:
        for i in self.by_feature.pop(fid, ()):
            self.counts[i] -= 1


def find_one_axp(tree: DecisionTree, assignment: PartialAssignment, label: str,
                 order: Optional[Iterable[int]] = None, incremental: bool = True) -> PartialAssignment:
    """A subset-minimal WAXp for `label` contained in the assignment.

    Raises:
        PreconditionError: the assignment is not a WAXp for `label`; the
            exception's `witness` is the first opposing consistent path.
    """
    check_assignment(tree, assignment)
    label = check_label(tree, label)
    features = deletion_order(assignment, order)

    if incremental:
        table = ConflictTable(tree, assignment, label)
        if table.unblocked is not None:
            raise PreconditionError(
                f"{assignment} is not a WAXp for class {label}: {table.unblocked} is consistent",
                witness=table.unblocked)
        kept = set(assignment.features)
        for fid in features:
            if table.removable(fid):
                table.remove(fid)
                kept.discard(fid)
        result = assignment.restrict(kept)
    else:
        verdict = is_waxp_for_class(tree, assignment, label)
        if not verdict.is_waxp:
            raise PreconditionError(
                f"{assignment} is not a WAXp for class {label}: {verdict.witness_path} is consistent",
                witness=verdict.witness_path)
        result = assignment
        for fid in features:
            candidate = result.without([fid])
            if is_waxp_for_class(tree, candidate, label).is_waxp:
                result = candidate

    logger.debug(f"AXp for class {label}: {result} ({len(assignment.features)} -> {len(result.features)} features)")
    return result


def is_axp(tree: DecisionTree, assignment: PartialAssignment, label: str) -> bool:
    """WAXp for `label` whose every single-feature deletion breaks the property."""
    check_assignment(tree, assignment)
    label = check_label(tree, label)
    table = ConflictTable(tree, assignment, label)
    if table.unblocked is not None:
        return False
    return not any(table.removable(fid) for fid in assignment.features)


def path_of(tree: DecisionTree, point: PartialAssignment) -> Path:
    """The unique path consistent with a complete point."""
    if not point.is_complete:
        raise PreconditionError(f"{point} is not a complete point")
    for path in tree.paths:
        if domains_consistent(point.domains, path.domains):
            return path
    raise PedtError(f"no path is consistent with {point}; validate the tree first")


def explain_instance(tree: DecisionTree, point: PartialAssignment,
                     order: Optional[Iterable[int]] = None) -> tuple:
    """(predicted class, one AXp) for a complete instance."""
    label = classify(tree, point)
    return label, find_one_axp(tree, point, label, order)
