"""
Feature domains and exact domain subsets.

A feature domain is boolean, categorical, an inclusive integer interval or
an inclusive real interval. A `DomainSubset` is the set of values a
conjunction of literals leaves open for one feature: a value set for
boolean/categorical features, a sorted union of disjoint maximal intervals
for ordinal ones. Emptiness is decided exactly, there is no epsilon.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

from model.errors import PedtError

Number = Union[int, float]
Value = Union[int, float, str]


class DomainKind(str, Enum):
    BOOLEAN = "boolean"
    CATEGORICAL = "categorical"
    ORDINAL_INT = "ordinal_int"
    ORDINAL_REAL = "ordinal_real"


@dataclass(frozen=True)
class FeatureSchema:
    """One feature: 1-based id, display name and domain."""

    id: int
    name: str
    kind: DomainKind
    values: tuple = ()
    lo: Optional[Number] = None
    hi: Optional[Number] = None

    def __post_init__(self):
        if self.kind == DomainKind.BOOLEAN:
            object.__setattr__(self, 'values', (0, 1))
        elif self.kind == DomainKind.CATEGORICAL:
            if not self.values:
                raise PedtError(f"feature {self.name}: categorical value set is empty")
            if len(set(self.values)) != len(self.values):
                raise PedtError(f"feature {self.name}: duplicated categorical values")
        else:
            if self.lo is None or self.hi is None:
                raise PedtError(f"feature {self.name}: ordinal domain needs lo and hi")
            if self.lo > self.hi:
                raise PedtError(
                    f"feature {self.name}: empty interval [{self.lo}, {self.hi}]")
            if self.kind == DomainKind.ORDINAL_INT and (
                    int(self.lo) != self.lo or int(self.hi) != self.hi):
                raise PedtError(f"feature {self.name}: integer domain with fractional bounds")

    @property
    def is_valued(self) -> bool:
        """True for features whose subsets are plain value sets."""
        return self.kind in (DomainKind.BOOLEAN, DomainKind.CATEGORICAL)

    @property
    def is_ordinal(self) -> bool:
        return self.kind in (DomainKind.ORDINAL_INT, DomainKind.ORDINAL_REAL)

    @property
    def is_enumerable(self) -> bool:
        return self.kind != DomainKind.ORDINAL_REAL

    @property
    def size(self) -> Optional[int]:
        if self.is_valued:
            return len(self.values)
        if self.kind == DomainKind.ORDINAL_INT:
            return int(self.hi) - int(self.lo) + 1
        return None

    def iter_values(self) -> Iterator[Value]:
        if self.is_valued:
            yield from self.values
        elif self.kind == DomainKind.ORDINAL_INT:
            yield from range(int(self.lo), int(self.hi) + 1)
        else:
            raise PedtError(f"feature {self.name}: real domain cannot be enumerated")

    def contains(self, value) -> bool:
        if self.is_valued:
            return value in self.values
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            return False
        if self.kind == DomainKind.ORDINAL_INT and int(value) != value:
            return False
        return self.lo <= value <= self.hi

    def full_domain(self) -> 'DomainSubset':
        return DomainSubset.full(self)


@dataclass(frozen=True, order=True)
class Interval:
    lo: Number
    hi: Number
    lo_closed: bool = True
    hi_closed: bool = True

    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    def contains(self, x: Number) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def intersect(self, other: 'Interval') -> 'Interval':
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        return Interval(lo, hi, lo_closed, hi_closed)

    def __str__(self) -> str:
        left = '[' if self.lo_closed else '('
        right = ']' if self.hi_closed else ')'
        return f"{left}{self.lo}, {self.hi}{right}"


def _to_integer_interval(iv: Interval) -> Interval:
    """Closed integer interval holding the same integers as `iv`."""
    lo = math.ceil(iv.lo) if iv.lo_closed else math.floor(iv.lo) + 1
    hi = math.floor(iv.hi) if iv.hi_closed else math.ceil(iv.hi) - 1
    return Interval(lo, hi, True, True)


def _touches(a: Interval, b: Interval, integer: bool) -> bool:
    """Whether b (starting at or after a) overlaps or abuts a."""
    if integer:
        return b.lo <= a.hi + 1
    if b.lo < a.hi:
        return True
    return b.lo == a.hi and (a.hi_closed or b.lo_closed)


def normalize_intervals(intervals, integer: bool) -> tuple:
    """Drop empties, sort, and merge into maximal disjoint intervals."""
    items = [_to_integer_interval(iv) if integer else iv for iv in intervals]
    items = [iv for iv in items if not iv.is_empty()]
    items.sort(key=lambda iv: (iv.lo, not iv.lo_closed))
    merged = []
    for iv in items:
        if merged and _touches(merged[-1], iv, integer):
            last = merged[-1]
            if iv.hi > last.hi:
                merged[-1] = Interval(last.lo, iv.hi, last.lo_closed, iv.hi_closed)
            elif iv.hi == last.hi and iv.hi_closed and not last.hi_closed:
                merged[-1] = Interval(last.lo, last.hi, last.lo_closed, True)
        else:
            merged.append(iv)
    return tuple(merged)


@dataclass(frozen=True)
class DomainSubset:
    """Values of one feature left open by a conjunction of literals."""

    feature: FeatureSchema
    values: Optional[frozenset] = None
    intervals: tuple = ()

    @classmethod
    def full(cls, feature: FeatureSchema) -> 'DomainSubset':
        if feature.is_valued:
            return cls(feature, values=frozenset(feature.values))
        return cls.of_intervals(feature, [Interval(feature.lo, feature.hi)])

    @classmethod
    def of_values(cls, feature: FeatureSchema, values) -> 'DomainSubset':
        if feature.is_valued:
            return cls(feature, values=frozenset(values))
        return cls.of_intervals(feature, [Interval(v, v) for v in values])

    @classmethod
    def of_intervals(cls, feature: FeatureSchema, intervals) -> 'DomainSubset':
        domain = Interval(feature.lo, feature.hi)
        clipped = [iv.intersect(domain) for iv in intervals]
        integer = feature.kind == DomainKind.ORDINAL_INT
        return cls(feature, intervals=normalize_intervals(clipped, integer))

    def is_empty(self) -> bool:
        if self.feature.is_valued:
            return not self.values
        return not self.intervals

    def contains(self, value) -> bool:
        if self.feature.is_valued:
            return value in self.values
        return any(iv.contains(value) for iv in self.intervals)

    def intersect(self, other: 'DomainSubset') -> 'DomainSubset':
        if self.feature.is_valued:
            return DomainSubset(self.feature, values=self.values & other.values)
        parts = [a.intersect(b) for a in self.intervals for b in other.intervals]
        integer = self.feature.kind == DomainKind.ORDINAL_INT
        return DomainSubset(self.feature, intervals=normalize_intervals(parts, integer))

    def union(self, other: 'DomainSubset') -> 'DomainSubset':
        if self.feature.is_valued:
            return DomainSubset(self.feature, values=self.values | other.values)
        integer = self.feature.kind == DomainKind.ORDINAL_INT
        return DomainSubset(
            self.feature,
            intervals=normalize_intervals(self.intervals + other.intervals, integer))

    def issubset(self, other: 'DomainSubset') -> bool:
        return self.intersect(other) == self

    def disjoint(self, other: 'DomainSubset') -> bool:
        return self.intersect(other).is_empty()

    def size(self) -> Optional[int]:
        if self.feature.is_valued:
            return len(self.values)
        if self.feature.kind == DomainKind.ORDINAL_INT:
            return sum(int(iv.hi) - int(iv.lo) + 1 for iv in self.intervals)
        if all(iv.lo == iv.hi for iv in self.intervals):
            return len(self.intervals)
        return None

    def iter_values(self) -> Iterator[Value]:
        if self.feature.is_valued:
            yield from (v for v in self.feature.values if v in self.values)
        elif self.feature.kind == DomainKind.ORDINAL_INT:
            for iv in self.intervals:
                yield from range(int(iv.lo), int(iv.hi) + 1)
        else:
            raise PedtError(f"feature {self.feature.name}: real subset cannot be enumerated")

    def smallest_point(self) -> Value:
        """Deterministic member: first declared value or lowest endpoint.

        Open real intervals yield the smallest integer inside them, or the
        midpoint when the interval holds no integer.
        """
        if self.is_empty():
            raise PedtError(f"feature {self.feature.name}: empty subset has no point")
        if self.feature.is_valued:
            return next(v for v in self.feature.values if v in self.values)
        first = self.intervals[0]
        if first.lo_closed:
            return first.lo
        candidate = math.floor(first.lo) + 1
        if first.contains(candidate):
            return candidate
        return (first.lo + first.hi) / 2

    def __str__(self) -> str:
        if self.feature.is_valued:
            ordered = [str(v) for v in self.feature.values if v in self.values]
            return "{" + ",".join(ordered) + "}"
        return " u ".join(str(iv) for iv in self.intervals) or "{}"
