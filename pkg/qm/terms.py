"""
Boolean terms and class-wise DNFs.

A `Term` is a conjunction of boolean literals stored as two bitmasks: bit
i-1 of `pos` means x_i, bit i-1 of `neg` means ~x_i. Minterms use the same
encoding (bit i-1 holds the value of x_i), so x1 is the least significant
bit.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from explain.waxp import check_label
from model.errors import UnsupportedSchemaError
from model.tree import DecisionTree


@dataclass(frozen=True)
class Term:
    pos: int = 0
    neg: int = 0

    def __post_init__(self):
        if self.pos & self.neg:
            raise ValueError(f"term fixes a feature both ways (pos={self.pos:b}, neg={self.neg:b})")

    @classmethod
    def from_literals(cls, literals: dict) -> 'Term':
        """Term from {feature id: 0 or 1}."""
        pos = neg = 0
        for fid, value in literals.items():
            if value:
                pos |= 1 << (fid - 1)
            else:
                neg |= 1 << (fid - 1)
        return cls(pos, neg)

    @property
    def mask(self) -> int:
        return self.pos | self.neg

    @property
    def size(self) -> int:
        return bin(self.pos | self.neg).count('1')

    def literals(self) -> list:
        """(feature id, polarity) pairs, features ascending; polarity 1 is positive."""
        out = []
        bits = self.pos | self.neg
        fid = 1
        while bits:
            if bits & 1:
                out.append((fid, 1 if self.pos >> (fid - 1) & 1 else 0))
            bits >>= 1
            fid += 1
        return out

    def sort_key(self) -> tuple:
        # positive literal before negative literal on the same feature
        return tuple((fid, 1 - polarity) for fid, polarity in self.literals())

    def absorbs(self, other: 'Term') -> bool:
        """True if every literal of self is in other (other implies self)."""
        return not (self.pos & ~other.pos) and not (self.neg & ~other.neg)

    def consensus(self, other: 'Term') -> Optional['Term']:
        """Consensus on the single clashing variable, None unless exactly one clashes."""
        clash = (self.pos & other.neg) | (self.neg & other.pos)
        if not clash or clash & (clash - 1):
            return None
        return Term((self.pos | other.pos) & ~clash, (self.neg | other.neg) & ~clash)

    def evaluate(self, point: int) -> bool:
        return (point & self.pos) == self.pos and not (point & self.neg)

    def minterms(self, n_features: int) -> Iterator[int]:
        free = ((1 << n_features) - 1) & ~(self.pos | self.neg)
        sub = free
        while True:
            yield self.pos | sub
            if sub == 0:
                break
            sub = (sub - 1) & free

    def render(self, names: Optional[list] = None) -> str:
        if not self.mask:
            return "1"
        parts = []
        for fid, polarity in self.literals():
            name = names[fid - 1] if names else f"x{fid}"
            parts.append(name if polarity else f"~{name}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


class DnfKind(str, Enum):
    RAW = "raw"
    BCF = "bcf"
    MINIMIZED = "minimized"


def canonical(terms) -> tuple:
    return tuple(sorted(set(terms), key=Term.sort_key))


@dataclass(frozen=True)
class ClassDnf:
    """Terms of one class predicate in canonical order."""

    label: str
    kind: DnfKind
    terms: tuple
    n_features: int
    names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'terms', canonical(self.terms))

    @property
    def cost(self) -> tuple:
        return len(self.terms), sum(t.size for t in self.terms)

    def evaluate(self, point: int) -> bool:
        return any(t.evaluate(point) for t in self.terms)

    def with_terms(self, terms, kind: DnfKind) -> 'ClassDnf':
        return ClassDnf(self.label, kind, tuple(terms), self.n_features, self.names)

    def __len__(self) -> int:
        return len(self.terms)

    def render(self) -> str:
        names = list(self.names) if self.names else None
        return "\n".join(t.render(names) for t in self.terms)

    def to_dict(self) -> dict:
        return {
            'class': self.label,
            'kind': self.kind.value,
            'features': self.n_features,
            'terms': [[{'feature': fid, 'positive': bool(p)} for fid, p in t.literals()]
                      for t in self.terms],
            'cost': {'terms': self.cost[0], 'literals': self.cost[1]},
        }


def point_to_minterm(values) -> int:
    """Minterm index of a boolean point given in feature-id order."""
    return sum(1 << i for i, v in enumerate(values) if v)


def class_terms(tree: DecisionTree, label: str) -> ClassDnf:
    """One term per path ending in `label`, built from the path literals.

    Raises:
        UnsupportedSchemaError: the tree has non-boolean features.
    """
    if not tree.schema.is_boolean:
        raise UnsupportedSchemaError("the QM/BCF baseline only handles boolean features")
    label = check_label(tree, label)
    terms = []
    for path in tree.paths_with_label(label):
        fixed = {}
        for fid, dom in path.domains.items():
            if len(dom.values) == 1:
                fixed[fid] = next(iter(dom.values))
        terms.append(Term.from_literals(fixed))
    names = tuple(f.name for f in tree.schema)
    return ClassDnf(label, DnfKind.RAW, tuple(terms), len(tree.schema), names)
