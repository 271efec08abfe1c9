"""
Brute-force ground truth by exhaustive enumeration.

Everything here walks complete points (or value-level cubes) of an
enumerable feature space. The polynomial-time algorithms in `explain` and
`equiv` are tested against these functions on small schemas.
"""

from typing import Optional

from joblib import Parallel, delayed
from loguru import logger

from model.assignment import PartialAssignment
from model.errors import CapExceededError, PreconditionError, SchemaMismatchError, UnknownClassError
from model.literals import Operator, make_literal
from model.tree import DecisionTree
from oracle.space import DEFAULT_POINT_CAP, EnumerableSpace, iter_chunk


def _first_disagreement(t1: DecisionTree, t2: DecisionTree, prefix, rest) -> Optional[tuple]:
    for point in iter_chunk(prefix, rest):
        if t1.predict(point) != t2.predict(point):
            return point
    return None


def brute_counterexample(t1: DecisionTree, t2: DecisionTree,
                         cap: int = DEFAULT_POINT_CAP, jobs: int = 1) -> Optional[tuple]:
    """First point (in enumeration order) where the two trees disagree, or None."""
    if t1.schema != t2.schema:
        raise SchemaMismatchError("trees are defined over different feature schemas")
    space = EnumerableSpace(t1.schema, cap)
    if jobs <= 1:
        return _first_disagreement(t1, t2, (), space.value_lists())

    results = Parallel(n_jobs=jobs)(
        delayed(_first_disagreement)(t1, t2, prefix, rest)
        for prefix, rest in space.chunks(jobs * 4))
    # chunks are in enumeration order, so the first hit is the global first
    return next((r for r in results if r is not None), None)


def brute_equivalent(t1: DecisionTree, t2: DecisionTree,
                     cap: int = DEFAULT_POINT_CAP, jobs: int = 1) -> bool:
    """True iff both trees classify every complete point identically.

    Raises:
        CapExceededError: the space has more points than `cap`.
    """
    point = brute_counterexample(t1, t2, cap, jobs)
    if point is not None:
        logger.debug(f"trees disagree at {point}")
    return point is None


def brute_is_waxp(tree: DecisionTree, assignment: PartialAssignment, label: str,
                  cap: int = DEFAULT_POINT_CAP) -> bool:
    """True iff every complete point in dom(assignment) is classified `label`."""
    if not assignment.consistent:
        raise PreconditionError(f"assignment {assignment} is inconsistent")
    if label not in tree.classes:
        raise UnknownClassError(f"unknown class {label!r}")
    space = EnumerableSpace(tree.schema, cap, assignment.domains)
    return all(tree.predict(point) == label for point in space)


class _CubeOracle:
    """Memoised implicant test over value-level cubes.

    A cube fixes some features to single values (None means free). It is an
    implicant of the class predicate iff every completion yields `label`;
    completions are looked up in a truth table of the whole space.
    """

    def __init__(self, tree: DecisionTree, label: str, space: EnumerableSpace):
        self.values = space.value_lists()
        self.index = [{v: i for i, v in enumerate(vals)} for vals in self.values]
        self.strides = []
        stride = 1
        for vals in reversed(self.values):
            self.strides.append(stride)
            stride *= len(vals)
        self.strides.reverse()
        # itertools.product order: last feature varies fastest
        self.table = bytearray(tree.predict(p) == label for p in space)
        self.memo: dict = {}

    def implicant(self, cube: tuple) -> bool:
        hit = self.memo.get(cube)
        if hit is not None:
            return hit
        offsets = [0]
        for i, v in enumerate(cube):
            stride = self.strides[i]
            if v is None:
                offsets = [o + k * stride for o in offsets for k in range(len(self.values[i]))]
            else:
                step = self.index[i][v] * stride
                offsets = [o + step for o in offsets]
        result = all(self.table[o] for o in offsets)
        self.memo[cube] = result
        return result

    def prime(self, cube: tuple) -> bool:
        if not self.implicant(cube):
            return False
        return all(
            not self.implicant(cube[:i] + (None,) + cube[i + 1:])
            for i, v in enumerate(cube) if v is not None)


def _cube_to_assignment(tree: DecisionTree, cube: tuple) -> PartialAssignment:
    return PartialAssignment(tree.schema, tuple(
        make_literal(f, Operator.EQ, v) for f, v in zip(tree.schema, cube) if v is not None))


def _candidate_cubes(values: list, instance: Optional[tuple]):
    """Every cube of the lattice: per feature free or one value."""
    cubes = [()]
    for i, vals in enumerate(values):
        options = [None] + ([instance[i]] if instance is not None else vals)
        cubes = [c + (o,) for c in cubes for o in options]
    return cubes


def brute_all_axps(tree: DecisionTree, label: str, cap: int = DEFAULT_POINT_CAP,
                   restrict_to: Optional[PartialAssignment] = None) -> frozenset:
    """All subset-minimal WAXps for `label` built from value-level literals.

    With `restrict_to` (a complete instance), candidate literals are those of
    the instance, giving the AXps of that instance.
    """
    if label not in tree.classes:
        raise UnknownClassError(f"unknown class {label!r}")
    space = EnumerableSpace(tree.schema, cap)
    instance = None
    if restrict_to is not None:
        if not restrict_to.is_complete:
            raise PreconditionError(f"instance {restrict_to} is not a complete point")
        instance = restrict_to.values()

    lattice = 1
    for vals in space.value_lists():
        lattice *= 2 if instance is not None else len(vals) + 1
    if lattice > cap:
        raise CapExceededError(f"candidate lattice holds {lattice} cubes, above the cap of {cap}")
    oracle = _CubeOracle(tree, label, space)

    found = frozenset(
        _cube_to_assignment(tree, cube)
        for cube in _candidate_cubes(oracle.values, instance)
        if oracle.prime(cube))
    logger.debug(f"{len(found)} AXp(s) for class {label} over {len(oracle.memo)} cubes")
    return found


def brute_path_partition(tree: DecisionTree, cap: int = DEFAULT_POINT_CAP) -> list:
    """Points that are not consistent with exactly one path (empty when sound)."""
    space = EnumerableSpace(tree.schema, cap)
    bad = []
    for point in space:
        hits = 0
        for path in tree.paths:
            if all(path.domains[fid].contains(point[fid - 1]) for fid in path.domains):
                hits += 1
                if hits > 1:
                    break
        if hits != 1:
            bad.append(point)
    return bad
