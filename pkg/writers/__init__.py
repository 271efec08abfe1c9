"""
Writers package - Markdown reports, JSON/YAML documents and DNF text.
"""

from .report_writer import (
    format_bench_table,
    format_conflict_matrix,
    write_bench_report,
)
from .document_writer import (
    dump_document,
    format_dnf,
    write_document,
)

__all__ = [
    'format_bench_table',
    'format_conflict_matrix',
    'write_bench_report',
    'dump_document',
    'format_dnf',
    'write_document',
]
