"""Tree comparison through class DNFs: minimized (unsound) and BCF (canonical)."""

from loguru import logger

from equiv.decide import check_comparable
from model.tree import DecisionTree
from qm.bcf import DEFAULT_TERM_CAP, bcf
from qm.cover import DEFAULT_FEATURE_CAP, LEX_LOW, CostModel, TieBreak, minimize
from qm.terms import class_terms


def qm_equivalence(t1: DecisionTree, t2: DecisionTree,
                   tie_break1: TieBreak = LEX_LOW, tie_break2: TieBreak = LEX_LOW,
                   cost_model: CostModel = CostModel.TERMS_THEN_LITERALS,
                   feature_cap: int = DEFAULT_FEATURE_CAP,
                   term_cap: int = DEFAULT_TERM_CAP) -> bool:
    """Compare per-class minimum DNFs term by term.

    Minimum DNFs are not canonical: with different tie-breaks two
    equivalent trees can get different minimum DNFs, and this comparison
    then wrongly reports them as different.
    """
    check_comparable(t1, t2)
    for label in t1.classes:
        d1 = minimize(bcf(class_terms(t1, label), term_cap=term_cap), tie_break1, cost_model, feature_cap)
        d2 = minimize(bcf(class_terms(t2, label), term_cap=term_cap), tie_break2, cost_model, feature_cap)
        if d1.terms != d2.terms:
            logger.info(f"minimized DNFs differ for class {label} ({tie_break1} vs {tie_break2})")
            return False
    return True


def bcf_equivalence(t1: DecisionTree, t2: DecisionTree, term_cap: int = DEFAULT_TERM_CAP) -> bool:
    """Compare per-class Blake canonical forms; sound and complete, exponential in the worst case."""
    check_comparable(t1, t2)
    for label in t1.classes:
        if bcf(class_terms(t1, label), term_cap=term_cap).terms != \
                bcf(class_terms(t2, label), term_cap=term_cap).terms:
            logger.info(f"BCFs differ for class {label}")
            return False
    return True
