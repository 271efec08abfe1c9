"""
Path consistency and weak abductive explanation checks.

A partial assignment is a WAXp for class c when every path consistent with
it ends in a c-leaf. All checks here scan the paths once; the scan can be
split across joblib workers and is reduced to the first hit in path order,
so verdicts and witnesses never depend on the schedule.
"""

from dataclasses import dataclass
from typing import Optional

from joblib import Parallel, delayed
from loguru import logger

from model.assignment import PartialAssignment
from model.domains import DomainSubset
from model.errors import PreconditionError, SchemaMismatchError, UnknownClassError
from model.tree import DecisionTree, Path


@dataclass(frozen=True)
class WaxpVerdict:
    is_waxp: bool
    label: Optional[str] = None
    witness_path: Optional[Path] = None

    def to_dict(self) -> dict:
        return {
            'is_waxp': self.is_waxp,
            'class': self.label,
            'witness_path': None if self.witness_path is None else list(self.witness_path.nodes),
        }


def disjoint(a: DomainSubset, b: DomainSubset) -> bool:
    if a.values is not None:
        return a.values.isdisjoint(b.values)
    return a.disjoint(b)


def domains_consistent(a: dict, b: dict) -> bool:
    """Whether two per-feature domain maps have a common point."""
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    # deepest literals sit last; they are the likeliest to clash
    for fid, dom in reversed(small.items()):
        other = large.get(fid)
        if other is not None and disjoint(dom, other):
            return False
    return True


def check_assignment(tree: DecisionTree, assignment: PartialAssignment) -> None:
    if assignment.schema is not tree.schema and assignment.schema != tree.schema:
        raise SchemaMismatchError("assignment and tree use different feature schemas")
    if not assignment.consistent:
        raise PreconditionError(f"assignment {assignment} is inconsistent")


def check_label(tree: DecisionTree, label: str) -> str:
    label = str(label)
    if label not in tree.classes:
        raise UnknownClassError(
            f"unknown class {label!r} (classes: {', '.join(tree.classes)})")
    return label


def path_consistent(assignment: PartialAssignment, path: Path) -> bool:
    """Consistency of an assignment with a tree path, feature by feature."""
    if assignment.schema is not path.literals.schema and assignment.schema != path.literals.schema:
        raise SchemaMismatchError("assignment and path use different feature schemas")
    return domains_consistent(assignment.domains, path.domains)


def _first_opposing(items: list, domains: dict, label: str) -> Optional[int]:
    for index, path_label, path_domains in items:
        if path_label != label and domains_consistent(domains, path_domains):
            return index
    return None


def _labels_reached(items: list, domains: dict) -> set:
    return {path_label for _, path_label, path_domains in items
            if domains_consistent(domains, path_domains)}


def _split(tree: DecisionTree, jobs: int) -> list:
    items = [(p.index, p.label, p.domains) for p in tree.paths]
    size = max(1, -(-len(items) // (jobs * 4)))
    return [items[i:i + size] for i in range(0, len(items), size)]


def first_opposing_path(tree: DecisionTree, assignment: PartialAssignment, label: str,
                        jobs: int = 1) -> Optional[Path]:
    """First path (in path order) with a class other than `label` consistent with the assignment."""
    domains = assignment.domains
    if jobs <= 1:
        for path in tree.paths:
            if path.label != label and domains_consistent(domains, path.domains):
                return path
        return None
    hits = Parallel(n_jobs=jobs)(
        delayed(_first_opposing)(chunk, domains, label) for chunk in _split(tree, jobs))
    found = [h for h in hits if h is not None]
    return tree.paths[min(found)] if found else None


def all_waxp_classes(tree: DecisionTree, assignment: PartialAssignment, jobs: int = 1) -> list:
    """Classes of all paths consistent with the assignment, in class order."""
    check_assignment(tree, assignment)
    domains = assignment.domains
    if jobs <= 1:
        reached = _labels_reached([(p.index, p.label, p.domains) for p in tree.paths], domains)
    else:
        parts = Parallel(n_jobs=jobs)(
            delayed(_labels_reached)(chunk, domains) for chunk in _split(tree, jobs))
        reached = set().union(*parts)
    return [c for c in tree.classes if c in reached]


def is_waxp_some_class(tree: DecisionTree, assignment: PartialAssignment,
                       jobs: int = 1) -> WaxpVerdict:
    """Whether all paths consistent with the assignment share one class.

    Raises:
        PreconditionError: the assignment is inconsistent.
    """
    reached = all_waxp_classes(tree, assignment, jobs)
    if len(reached) == 1:
        return WaxpVerdict(True, reached[0])
    logger.debug(f"{assignment} reaches classes {reached}")
    return WaxpVerdict(False)


def is_waxp_for_class(tree: DecisionTree, assignment: PartialAssignment, label: str,
                      jobs: int = 1) -> WaxpVerdict:
    """Whether no path of another class is consistent with the assignment.

    On a negative verdict the witness is the first such path in path order.
    """
    check_assignment(tree, assignment)
    label = check_label(tree, label)
    witness = first_opposing_path(tree, assignment, label, jobs)
    if witness is None:
        return WaxpVerdict(True, label)
    return WaxpVerdict(False, None, witness)


def predict_with_missing(tree: DecisionTree, assignment: PartialAssignment,
                         jobs: int = 1) -> Optional[str]:
    """The class every completion of the assignment receives, or None when undetermined."""
    verdict = is_waxp_some_class(tree, assignment, jobs)
    return verdict.label if verdict.is_waxp else None
