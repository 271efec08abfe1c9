"""
BCF cache keyed by tree fingerprint and class label.
"""

import hashlib
import json
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from loguru import logger

from model.documents import serialize
from model.tree import DecisionTree
from qm.bcf import DEFAULT_TERM_CAP, FIFO, bcf
from qm.terms import ClassDnf, DnfKind, Term, class_terms
from utils.helpers import ensure_dir_exists, sanitize_filename


def tree_fingerprint(tree: DecisionTree) -> str:
    """sha256 of the tree document with sorted keys."""
    text = json.dumps(serialize(tree), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def get_cache_path(fingerprint: str, label: str, cache_dir: str) -> str:
    """Generate cache file path."""
    safe_label = sanitize_filename(label) or 'class'
    return os.path.join(cache_dir, f"{fingerprint[:32]}_{safe_label}.json")


def load_from_cache(cache_file: str, fingerprint: str, label: str) -> Optional[ClassDnf]:
    if not os.path.exists(cache_file):
        return None

    try:
        with open(cache_file, 'r', encoding='utf-8') as f:
            data = json.load(f)

        required_fields = ['fingerprint', 'class', 'features', 'terms']
        if not all(field in data for field in required_fields):
            return None
        if data['fingerprint'] != fingerprint or data['class'] != label:
            return None

        terms = tuple(Term(pos, neg) for pos, neg in data['terms'])
        names = tuple(data['names']) if data.get('names') else None
        return ClassDnf(label, DnfKind.BCF, terms, data['features'], names)
    except (json.JSONDecodeError, IOError, TypeError, ValueError) as e:
        logger.warning(f"Error loading cache file {cache_file}: {e}")
        return None


def save_to_cache(cache_file: str, fingerprint: str, dnf: ClassDnf) -> bool:
    try:
        ensure_dir_exists(os.path.dirname(cache_file))

        cache_data = {
            'fingerprint': fingerprint,
            'class': dnf.label,
            'features': dnf.n_features,
            'names': list(dnf.names) if dnf.names else None,
            'terms': [[t.pos, t.neg] for t in dnf.terms],
            'computed_at': datetime.now(timezone.utc).isoformat()
        }

        with open(cache_file, 'w', encoding='utf-8') as f:
            json.dump(cache_data, f, ensure_ascii=False, indent=2)

        return True
    except IOError as e:
        logger.warning(f"Error saving cache file {cache_file}: {e}")
        return False


def get_bcf(
    tree: DecisionTree,
    label: str,
    cache_dir: Optional[str] = None,
    term_cap: int = DEFAULT_TERM_CAP,
    order: str = FIFO,
    force_refresh: bool = False
) -> tuple:
    """
    BCF of one class, served from the cache when possible.

    Returns:
        (ClassDnf, source) where source is 'cache' or 'computed'.
    """
    label = str(label)
    if cache_dir is None:
        return bcf(class_terms(tree, label), order, term_cap), 'computed'

    fingerprint = tree_fingerprint(tree)
    cache_file = get_cache_path(fingerprint, label, cache_dir)

    if not force_refresh:
        cached = load_from_cache(cache_file, fingerprint, label)
        if cached is not None:
            logger.debug(f"BCF for class {label} served from {cache_file}")
            return cached, 'cache'

    result = bcf(class_terms(tree, label), order, term_cap)
    save_to_cache(cache_file, fingerprint, result)
    return result, 'computed'


def _entries(cache_dir: str) -> list:
    root = Path(cache_dir)
    return sorted(root.glob('*.json')) if root.is_dir() else []


def clear_cache(cache_dir: str, older_than_days: Optional[int] = None) -> int:
    """Delete cached BCFs, optionally only those written more than N days ago."""
    cutoff = None
    if older_than_days is not None:
        cutoff = datetime.now(timezone.utc).timestamp() - older_than_days * 86400

    deleted = 0
    for entry in _entries(cache_dir):
        try:
            if cutoff is not None and entry.stat().st_mtime >= cutoff:
                continue
            entry.unlink()
            deleted += 1
        except OSError as e:
            logger.warning(f"Could not remove cache entry {entry}: {e}")
    logger.debug(f"removed {deleted} BCF cache entries from {cache_dir}")
    return deleted


def get_cache_stats(cache_dir: str) -> dict:
    """Readable entries, their total size and the entry count per class label."""
    per_class: dict = {}
    total_size = 0
    for entry in _entries(cache_dir):
        try:
            with entry.open('r', encoding='utf-8') as f:
                label = str(json.load(f)['class'])
            total_size += entry.stat().st_size
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
            logger.warning(f"Skipping unreadable cache entry {entry}: {e}")
            continue
        per_class[label] = per_class.get(label, 0) + 1

    return {
        'total_files': sum(per_class.values()),
        'total_size_bytes': total_size,
        'classes': per_class,
    }
