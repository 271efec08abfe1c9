"""
Document Writer - JSON/YAML documents and plain-text DNFs
"""

import json
from pathlib import Path
from typing import Any

import yaml

from qm.terms import ClassDnf

YAML_SUFFIXES = ('.yaml', '.yml')


def dump_document(data: Any, fmt: str = 'json') -> str:
    if fmt == 'yaml':
        return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
    return json.dumps(data, ensure_ascii=False, indent=2)


def write_document(path: str, data: Any) -> None:
    """Writes a document as YAML for .yaml/.yml paths, JSON otherwise."""
    file_path = Path(path)
    fmt = 'yaml' if file_path.suffix.lower() in YAML_SUFFIXES else 'json'
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(dump_document(data, fmt) + ('' if fmt == 'yaml' else '\n'), encoding='utf-8')


def format_dnf(dnf: ClassDnf) -> str:
    """One term per line, literals as x3 / ~x3 with features ascending."""
    if not dnf.terms:
        return "0"
    return dnf.render()
