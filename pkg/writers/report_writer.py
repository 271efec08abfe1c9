"""
Report Writer - Markdown tables for benchmark reports and path conflict matrices
"""

from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List

from bench.tables import BenchReport

TABLE1_COLUMNS = ['r', 'nodes', 'features', '|BCF_0|', '|BCF_1|', 'BCF_0 s', 'BCF_1 s', 'status']
TABLE2_COLUMNS = ['r', 'nodes', 'features', 'paths s', 'one AXp s', 'isWAXp s', 'equiv s', 'status']

STATUS_MARKS = {
    'pass': '✅ pass',
    'fail': '❌ fail',
    'capped': '⚠️ capped',
    'unchecked': '·',
}


def _cell(value) -> str:
    if value is None:
        return '--'
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def _table(columns: List[str], rows: List[List]) -> str:
    lines = [
        '| ' + ' | '.join(columns) + ' |',
        '|' + '|'.join('---' for _ in columns) + '|',
    ]
    for row in rows:
        lines.append('| ' + ' | '.join(_cell(v) for v in row) + ' |')
    return '\n'.join(lines)


def format_bench_table(report: BenchReport) -> str:
    """Formats a bench report as a Markdown section."""
    timestamp = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M UTC")

    if report.table == 1:
        columns = TABLE1_COLUMNS
        rows = [[row.r, row.nodes, row.features, row.bcf0, row.bcf1,
                 row.times.get('bcf0'), row.times.get('bcf1'), STATUS_MARKS[row.status]]
                for row in report.rows]
    else:
        columns = TABLE2_COLUMNS
        rows = [[row.r, row.nodes, row.features, row.times.get('paths'),
                 row.times.get('one_axp'), row.times.get('is_waxp'), row.times.get('equiv'),
                 STATUS_MARKS[row.status]]
                for row in report.rows]

    section = f"## Table {report.table}\n\n" + _table(columns, rows) + "\n"

    notes = [f"- r={row.r}: {row.note}" for row in report.rows if row.note]
    if notes:
        section += "\n**Notes:**\n" + "\n".join(notes) + "\n"
    if report.contended:
        section += "\n*Cases ran in parallel; timings are contended.*\n"

    section += f"\n---\n*Generated {timestamp}*\n"
    return section


def format_conflict_matrix(matrix: List[List[str]]) -> str:
    """Path-pair table: rows are paths of the first tree, columns of the second."""
    if not matrix:
        return ''
    marks: Dict[str, str] = {'same-class': '=', 'consistent': 'X', 'inconsistent': '.'}
    columns = [''] + [f"P{j + 1}" for j in range(len(matrix[0]))]
    rows = [[f"P{i + 1}"] + [marks[c] for c in row] for i, row in enumerate(matrix)]
    return _table(columns, rows)


def write_bench_report(path: str, report: BenchReport) -> None:
    """Writes the Markdown table for a bench report, replacing the file."""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(format_bench_table(report), encoding='utf-8')
