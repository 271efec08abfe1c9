"""Enumerable feature spaces with a size guardrail."""

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional

from model.assignment import Schema
from model.domains import DomainSubset
from model.errors import CapExceededError, UnsupportedSchemaError

DEFAULT_POINT_CAP = 2 ** 20


@dataclass(frozen=True)
class EnumerableSpace:
    """All complete points of a schema, optionally restricted per feature.

    `domains` maps feature ids to the subset left open for that feature;
    features absent from it range over their full domain.
    """

    schema: Schema
    cap: int = DEFAULT_POINT_CAP
    domains: Optional[dict] = None

    def __post_init__(self):
        bad = [f.name for f in self.schema if not f.is_enumerable]
        if bad:
            raise UnsupportedSchemaError(
                f"cannot enumerate real-valued features: {', '.join(bad)}")
        if self.size > self.cap:
            raise CapExceededError(
                f"feature space holds {self.size} points, above the cap of {self.cap}; "
                "use the polynomial-time checks instead")

    def _domain(self, feature) -> DomainSubset:
        doms = self.domains or {}
        return doms.get(feature.id) or DomainSubset.full(feature)

    def value_lists(self) -> list:
        return [list(self._domain(f).iter_values()) for f in self.schema]

    @property
    def size(self) -> int:
        return math.prod(self._domain(f).size() for f in self.schema)

    def __iter__(self) -> Iterator[tuple]:
        return itertools.product(*self.value_lists())

    def chunks(self, parts: int) -> list:
        """Split into independent sub-spaces by fixing leading features."""
        values = self.value_lists()
        prefix_len = 0
        count = 1
        while prefix_len < len(values) and count < parts:
            count *= len(values[prefix_len])
            prefix_len += 1
        prefixes = itertools.product(*values[:prefix_len])
        rest = values[prefix_len:]
        return [(prefix, rest) for prefix in prefixes]


def iter_chunk(prefix: tuple, rest: list) -> Iterator[tuple]:
    for suffix in itertools.product(*rest):
        yield prefix + suffix
