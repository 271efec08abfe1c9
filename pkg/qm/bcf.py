"""
Blake canonical form by iterated consensus with absorption.

Terms are `Term` bitmask pairs throughout the closure loop. A
worklist holds terms whose consensus with the current set has not been
tried yet; new terms absorbed by an existing one are dropped, and terms a
new one absorbs are removed on insert. The closure is the set of all prime
implicants whatever the worklist order.
"""

from collections import deque

from loguru import logger

from model.errors import TermCapExceededError
from qm.terms import ClassDnf, DnfKind, Term

DEFAULT_TERM_CAP = 500_000

FIFO = "fifo"
LIFO = "lifo"


def _absorbed(term: Term, current: dict) -> bool:
    return any(t.absorbs(term) for t in current)


def _minimal(terms) -> dict:
    """Drop duplicates and absorbed terms, fewest literals first."""
    kept: dict = {}
    for term in sorted(set(terms), key=lambda t: t.size):
        if not _absorbed(term, kept):
            kept[term] = None
    return kept


def bcf(raw: ClassDnf, order: str = FIFO, term_cap: int = DEFAULT_TERM_CAP) -> ClassDnf:
    """All prime implicants of the disjunction of `raw`'s terms.

    Raises:
        TermCapExceededError: the working set grew beyond `term_cap`.
    """
    if order not in (FIFO, LIFO):
        raise ValueError(f"unknown worklist order {order!r} (expected {FIFO} or {LIFO})")
    current = _minimal(raw.terms)
    queue = deque(current)
    take = queue.popleft if order == FIFO else queue.pop
    rounds = 0

    while queue:
        t = take()
        if t not in current:
            continue
        rounds += 1
        for u in list(current):
            if u not in current:
                continue
            c = t.consensus(u)
            if c is None or _absorbed(c, current):
                continue
            for victim in [v for v in current if c.absorbs(v)]:
                del current[victim]
            current[c] = None
            queue.append(c)
            if len(current) > term_cap:
                raise TermCapExceededError(
                    f"consensus closure for class {raw.label} exceeded {term_cap} terms")
            if t not in current:
                break

    result = _minimal(current)
    logger.debug(f"BCF of class {raw.label}: {len(raw.terms)} -> {len(result)} terms after {rounds} rounds")
    return raw.with_terms(result, DnfKind.BCF)
