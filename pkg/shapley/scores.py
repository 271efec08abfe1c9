"""
Corrected SHAP scores.

The characteristic function is the WAXp indicator: a subset S of features
is worth 1 when fixing the instance's values on S already entails the
predicted class, 0 otherwise. Scores combine it with the usual Shapley
weights

    phi_i = sum over S not containing i of |S|! (m-|S|-1)! / m! * (v(S+i) - v(S))

evaluated over all 2^m subsets with exact `Fraction` arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from joblib import Parallel, delayed
from loguru import logger

from explain.waxp import is_waxp_for_class
from model.assignment import PartialAssignment
from model.errors import CapExceededError, PreconditionError
from model.tree import DecisionTree, classify

DEFAULT_SHAP_FEATURE_CAP = 20


@dataclass(frozen=True)
class ScoreVector:
    """One exact score per feature, in feature-id order."""

    names: tuple
    scores: tuple

    def __len__(self) -> int:
        return len(self.scores)

    def __getitem__(self, index: int) -> Fraction:
        return self.scores[index]

    def to_dict(self) -> dict:
        return {
            name: {'exact': str(score), 'approx': float(score)}
            for name, score in zip(self.names, self.scores)
        }


def _check_instance(tree: DecisionTree, point: PartialAssignment, label: str) -> str:
    label = str(label)
    predicted = classify(tree, point)
    if predicted != label:
        raise PreconditionError(f"instance {point} is classified {predicted}, not {label}")
    return label


def char_fn(tree: DecisionTree, instance: tuple, subset: Iterable[int]) -> int:
    """1 iff the instance restricted to `subset` is a WAXp for its class."""
    point, label = instance
    label = _check_instance(tree, point, label)
    return int(is_waxp_for_class(tree, point.restrict(subset), label).is_waxp)


def _values(tree: DecisionTree, point: PartialAssignment, label: str, masks: range) -> list:
    ids = list(tree.schema.ids)
    out = []
    for mask in masks:
        subset = [fid for bit, fid in enumerate(ids) if mask >> bit & 1]
        out.append(int(is_waxp_for_class(tree, point.restrict(subset), label).is_waxp))
    return out


def corrected_shap(tree: DecisionTree, instance: tuple, cap: int = DEFAULT_SHAP_FEATURE_CAP,
                   jobs: int = 1) -> ScoreVector:
    """Exact corrected SHAP scores of a (complete point, class) instance.

    Raises:
        CapExceededError: more features than `cap`.
        PreconditionError: the point is not classified as the given class.
    """
    point, label = instance
    label = _check_instance(tree, point, label)
    m = len(tree.schema)
    if m > cap:
        raise CapExceededError(f"{m} features is above the SHAP cap of {cap}")

    total = 1 << m
    if jobs <= 1:
        table = _values(tree, point, label, range(total))
    else:
        step = max(1, -(-total // (jobs * 4)))
        parts = Parallel(n_jobs=jobs)(
            delayed(_values)(tree, point, label, range(lo, min(lo + step, total)))
            for lo in range(0, total, step))
        table = [v for part in parts for v in part]

    weight = [Fraction(factorial(s) * factorial(m - s - 1), factorial(m)) for s in range(m)]
    scores = [Fraction(0)] * m
    for mask in range(total):
        if not table[mask]:
            continue
        size = bin(mask).count('1')
        for i in range(m):
            if mask >> i & 1:
                scores[i] += weight[size - 1]
            else:
                scores[i] -= weight[size]
    logger.debug(f"corrected SHAP over {total} subsets: {[str(s) for s in scores]}")
    return ScoreVector(tuple(f.name for f in tree.schema), tuple(scores))
