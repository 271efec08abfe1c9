"""Benchmark harness reproducing the BCF blowup and the large-gadget timings."""

from .tables import (
    EXPECTED_BCF_SIZES,
    BenchReport,
    BenchRow,
    run_table1,
    run_table2,
    table1_row,
    table2_row,
)

__all__ = [
    'EXPECTED_BCF_SIZES',
    'BenchReport',
    'BenchRow',
    'run_table1',
    'run_table2',
    'table1_row',
    'table2_row',
]
