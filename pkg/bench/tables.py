"""
Benchmark harness for the gadget family.

Table 1 measures BCF sizes and times for small r against the known
sizes. Table 2 times the polynomial-time queries on large gadgets: one AXp
and one WAXp check on the longest-path assignment, and an equivalence
check against the tree with its deepest leaf relabelled.
"""

import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from joblib import Parallel, delayed
from loguru import logger
from tqdm import tqdm

from cache.bcf_cache import get_bcf
from equiv.decide import decide
from explain.axp import find_one_axp
from explain.waxp import is_waxp_for_class
from gen.families import GadgetParams, worst_case
from gen.random_trees import longest_path_assignment, mutate_leaf
from model.errors import TermCapExceededError
from qm.bcf import DEFAULT_TERM_CAP

# (|BCF_0|, |BCF_1|) per r; |BCF_1| = 3 * 2^r - 2
EXPECTED_BCF_SIZES = {
    3: (4, 22),
    4: (5, 46),
    5: (6, 94),
    6: (7, 190),
    7: (8, 382),
    8: (9, 766),
    9: (10, 1534),
}

PASS = "pass"
FAIL = "fail"
CAPPED = "capped"
UNCHECKED = "unchecked"


@dataclass
class BenchRow:
    r: int
    nodes: int
    features: int
    bcf0: Optional[int] = None
    bcf1: Optional[int] = None
    times: dict = field(default_factory=dict)
    status: str = UNCHECKED
    note: str = ""


@dataclass
class BenchReport:
    table: int
    rows: list = field(default_factory=list)
    contended: bool = False

    @property
    def ok(self) -> bool:
        return all(row.status != FAIL for row in self.rows)

    def to_dict(self) -> dict:
        return {
            'table': self.table,
            'contended': self.contended,
            'ok': self.ok,
            'rows': [asdict(row) for row in self.rows],
        }


def _timed(fn, *args, **kwargs) -> tuple:
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, round(time.perf_counter() - start, 4)


def table1_row(r: int, term_cap: int = DEFAULT_TERM_CAP, cache_dir: Optional[str] = None) -> BenchRow:
    tree = worst_case(r)
    row = BenchRow(r, tree.node_count, tree.feature_count)
    try:
        (dnf0, src0), row.times['bcf0'] = _timed(get_bcf, tree, "0", cache_dir, term_cap)
        (dnf1, src1), row.times['bcf1'] = _timed(get_bcf, tree, "1", cache_dir, term_cap)
    except TermCapExceededError as exc:
        row.status = CAPPED
        row.note = str(exc)
        logger.warning(f"r={r}: {exc}")
        return row
    row.bcf0, row.bcf1 = len(dnf0), len(dnf1)
    if 'cache' in (src0, src1):
        row.note = "served from cache"

    expected = EXPECTED_BCF_SIZES.get(r)
    if expected is not None:
        row.status = PASS if (row.bcf0, row.bcf1) == expected else FAIL
        if row.status == FAIL:
            row.note = f"expected {expected}"
    return row


def run_table1(r_min: int = 3, r_max: int = 8, term_cap: int = DEFAULT_TERM_CAP,
               cache_dir: Optional[str] = None, jobs: int = 1) -> BenchReport:
    """BCF sizes and times of worst_case(r) for r in [r_min, r_max]."""
    if r_min < 3:
        raise ValueError(f"r_min must be >= 3, got {r_min}")
    r_values = list(range(r_min, r_max + 1))
    report = BenchReport(1, contended=jobs > 1)
    if jobs > 1:
        report.rows = Parallel(n_jobs=jobs)(
            delayed(table1_row)(r, term_cap, cache_dir) for r in r_values)
    else:
        report.rows = [table1_row(r, term_cap, cache_dir) for r in tqdm(r_values, desc="table 1")]
    logger.info(f"table 1: {len(report.rows)} rows, ok={report.ok}")
    return report


def table2_row(r: int) -> BenchRow:
    params = GadgetParams(r)
    tree = worst_case(r)
    row = BenchRow(r, tree.node_count, tree.feature_count)
    _, row.times['paths'] = _timed(lambda: tree.paths)
    twin = mutate_leaf(tree)
    assignment = longest_path_assignment(tree)
    label = tree.predict(assignment.values())

    axp, row.times['one_axp'] = _timed(find_one_axp, tree, assignment, label)
    verdict, row.times['is_waxp'] = _timed(is_waxp_for_class, tree, assignment, label)
    equiv, row.times['equiv'] = _timed(decide, tree, twin)

    sizes_ok = (row.nodes, row.features) == (params.nodes, params.features)
    checks_ok = verdict.is_waxp and not equiv.equivalent
    row.status = PASS if sizes_ok and checks_ok else FAIL
    row.note = f"AXp size {len(axp.features)}, {equiv.pairs_checked} pair checks"
    return row


def run_table2(r_values=(200, 500, 1000), jobs: int = 1) -> BenchReport:
    """Polynomial-time query times on large gadgets."""
    for r in r_values:
        GadgetParams(r)
    report = BenchReport(2, contended=jobs > 1)
    if jobs > 1:
        report.rows = Parallel(n_jobs=jobs)(delayed(table2_row)(r) for r in r_values)
    else:
        report.rows = [table2_row(r) for r in tqdm(list(r_values), desc="table 2")]
    logger.info(f"table 2: {len(report.rows)} rows, ok={report.ok}")
    return report
