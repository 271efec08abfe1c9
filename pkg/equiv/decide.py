"""
Predictive equivalence of decision trees.

Two trees over the same schema are predictive equivalent iff no pair of
paths with different leaf classes has a common point. `decide` scans
exactly those pairs, with the tree having more paths in the outer loop,
and returns the first conflicting pair in (outer, inner) order together
with a concrete point on which the trees disagree.
"""

from dataclasses import dataclass
from typing import Optional

from joblib import Parallel, delayed
from loguru import logger

from equiv.bitsets import PathPacker
from explain.waxp import domains_consistent, is_waxp_for_class
from model.assignment import PartialAssignment
from model.errors import PreconditionError, SchemaMismatchError
from model.tree import DecisionTree, Path

SAME_CLASS = "same-class"
CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class Witness:
    """Conflicting path pair (path1 from t1, path2 from t2) and a point in both."""

    path1: Path
    path2: Path
    point: PartialAssignment

    def to_dict(self) -> dict:
        return {
            'path1': list(self.path1.nodes),
            'path2': list(self.path2.nodes),
            'class1': self.path1.label,
            'class2': self.path2.label,
        }


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    witness: Optional[Witness] = None
    pairs_checked: int = 0


@dataclass(frozen=True)
class NonEquivalenceCertificate:
    point: PartialAssignment
    label1: str
    label2: str


def check_comparable(t1: DecisionTree, t2: DecisionTree) -> None:
    if t1.schema is not t2.schema and t1.schema != t2.schema:
        raise SchemaMismatchError("trees are defined over different feature schemas")
    if set(t1.classes) != set(t2.classes):
        raise SchemaMismatchError(
            f"trees use different class sets: {list(t1.classes)} vs {list(t2.classes)}")


def _scan(outer: list, inner_by_label: dict, packer: PathPacker) -> tuple:
    """First consistent conflicting pair of the outer slice and the number of pairs tried."""
    checked = 0
    for oi, label, omask, ores in outer:
        candidates = inner_by_label[label]
        for pos, (ii, imask, ires) in enumerate(candidates):
            if not packer.consistent(omask, imask):
                continue
            if ores and ires and not domains_consistent(ores, ires):
                continue
            return (oi, ii), checked + pos + 1
        checked += len(candidates)
    return None, checked


def decide(t1: DecisionTree, t2: DecisionTree, jobs: int = 1) -> EquivVerdict:
    """Decide predictive equivalence, with a witness on failure.

    `pairs_checked` counts the pair tests actually run; under `jobs > 1`
    every slice runs to its own first hit, so the count may be larger than
    in a serial run while verdict and witness stay the same.

    Raises:
        SchemaMismatchError: different schemas or class sets.
    """
    check_comparable(t1, t2)
    swapped = len(t2.paths) > len(t1.paths)
    outer_tree, inner_tree = (t2, t1) if swapped else (t1, t2)

    packer = PathPacker(t1.schema)
    outer = [(p.index, p.label, packer.mask(p), packer.residual(p)) for p in outer_tree.paths]
    inner = [(p.index, p.label, packer.mask(p), packer.residual(p)) for p in inner_tree.paths]
    inner_by_label = {
        c: [(i, m, r) for i, label, m, r in inner if label != c] for c in outer_tree.classes
    }

    if jobs <= 1:
        hit, checked = _scan(outer, inner_by_label, packer)
    else:
        size = max(1, -(-len(outer) // (jobs * 4)))
        parts = Parallel(n_jobs=jobs)(
            delayed(_scan)(outer[i:i + size], inner_by_label, packer)
            for i in range(0, len(outer), size))
        hits = [h for h, _ in parts if h is not None]
        hit = min(hits) if hits else None
        checked = sum(n for _, n in parts)

    if hit is None:
        logger.info(f"equivalent: {len(t1.paths)} x {len(t2.paths)} paths, {checked} pair checks")
        return EquivVerdict(True, None, checked)

    oi, ii = hit
    if swapped:
        p1, p2 = t1.paths[ii], t2.paths[oi]
    else:
        p1, p2 = t1.paths[oi], t2.paths[ii]
    point = p1.literals.smallest_point(extra=p2.domains)
    logger.info(f"not equivalent: path {p1.index} of t1 conflicts with path {p2.index} of t2 "
                f"after {checked} pair checks")
    logger.debug(f"conflicting paths {p1} and {p2}, witness {point}")
    return EquivVerdict(False, Witness(p1, p2, point), checked)


def conflict_matrix(t1: DecisionTree, t2: DecisionTree) -> list:
    """Rows for t1's paths, columns for t2's: same-class, consistent or inconsistent."""
    check_comparable(t1, t2)
    rows = []
    for p1 in t1.paths:
        row = []
        for p2 in t2.paths:
            if p1.label == p2.label:
                row.append(SAME_CLASS)
            elif domains_consistent(p1.domains, p2.domains):
                row.append(CONSISTENT)
            else:
                row.append(INCONSISTENT)
        rows.append(row)
    return rows


def disprove_by_axps(a1: tuple, a2: tuple, t1: Optional[DecisionTree] = None,
                     t2: Optional[DecisionTree] = None) -> Optional[NonEquivalenceCertificate]:
    """Non-equivalence certificate from two WAXps of different classes.

    `a1` and `a2` are (assignment, class) pairs. When the trees are passed,
    each assignment is first checked to be a WAXp of its tree.

    Raises:
        PreconditionError: equal classes, or a failed WAXp check.
    """
    (x1, c1), (x2, c2) = a1, a2
    c1, c2 = str(c1), str(c2)
    if c1 == c2:
        raise PreconditionError(f"both explanations are for class {c1}; need different classes")
    if x1.schema != x2.schema:
        raise SchemaMismatchError("assignments use different feature schemas")
    for tree, x, c, name in ((t1, x1, c1, "t1"), (t2, x2, c2, "t2")):
        if tree is None:
            continue
        verdict = is_waxp_for_class(tree, x, c)
        if not verdict.is_waxp:
            raise PreconditionError(
                f"{x} is not a WAXp of {name} for class {c}", witness=verdict.witness_path)

    joint = x1.joint_domains(x2)
    if any(d.is_empty() for d in joint.values()):
        return None
    point = x1.smallest_point(extra=x2.domains)
    return NonEquivalenceCertificate(point, c1, c2)
