"""Feature schemas and partial assignments."""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from model.domains import DomainKind, DomainSubset, FeatureSchema
from model.errors import PedtError, SchemaMismatchError
from model.literals import Literal, Operator, make_literal


@dataclass(frozen=True)
class Schema:
    """Ordered features with ids 1..m."""

    features: tuple

    def __post_init__(self):
        object.__setattr__(self, 'features', tuple(self.features))
        for index, feature in enumerate(self.features, start=1):
            if feature.id != index:
                raise PedtError(
                    f"feature ids must be contiguous 1..m: position {index} holds id {feature.id}")
        names = [f.name for f in self.features]
        if len(set(names)) != len(names):
            raise PedtError("feature names must be unique")

    def __len__(self) -> int:
        return len(self.features)

    def __iter__(self) -> Iterator[FeatureSchema]:
        return iter(self.features)

    @property
    def ids(self) -> range:
        return range(1, len(self.features) + 1)

    def feature(self, feature_id: int) -> FeatureSchema:
        if not 1 <= feature_id <= len(self.features):
            raise PedtError(f"unknown feature id {feature_id}")
        return self.features[feature_id - 1]

    def by_name(self, name: str) -> FeatureSchema:
        for f in self.features:
            if f.name == name:
                return f
        raise PedtError(f"unknown feature name {name!r}")

    def resolve(self, key) -> FeatureSchema:
        """Feature by id, name, or `x<id>` shorthand."""
        if isinstance(key, int):
            return self.feature(key)
        key = str(key).strip()
        for f in self.features:
            if f.name == key:
                return f
        if key.isdigit():
            return self.feature(int(key))
        if key[:1] in ('x', 'X') and key[1:].isdigit():
            return self.feature(int(key[1:]))
        raise PedtError(f"unknown feature {key!r}")

    @property
    def is_boolean(self) -> bool:
        return all(f.kind == DomainKind.BOOLEAN for f in self.features)

    @property
    def is_enumerable(self) -> bool:
        return all(f.is_enumerable for f in self.features)


@dataclass(frozen=True)
class PartialAssignment:
    """A set of literals over a schema; several literals per feature are conjoined.

    Consistency (every feature keeps a non-empty domain) is computed on
    construction and exposed as `consistent`; operations that need it say so.
    """

    schema: Schema
    literals: tuple = ()

    def __post_init__(self):
        unique = dict.fromkeys(self.literals)
        for lit in unique:
            expected = self.schema.feature(lit.feature_id)
            if lit.feature is not expected and lit.feature != expected:
                raise SchemaMismatchError(f"literal {lit} is not over this schema")
        ordered = tuple(sorted(unique, key=Literal.sort_key))
        object.__setattr__(self, 'literals', ordered)

    @classmethod
    def from_point(cls, schema: Schema, values: Sequence) -> 'PartialAssignment':
        """Complete assignment with one EQ literal per feature."""
        if len(values) != len(schema):
            raise PedtError(f"point has {len(values)} values for {len(schema)} features")
        return cls(schema, tuple(
            make_literal(f, Operator.EQ, v) for f, v in zip(schema, values)))

    @classmethod
    def from_mapping(cls, schema: Schema, mapping: dict) -> 'PartialAssignment':
        """Assignment fixing the features named in `mapping` (id, name or x<id>)."""
        return cls(schema, tuple(
            make_literal(schema.resolve(k), Operator.EQ, v) for k, v in mapping.items()))

    @cached_property
    def domains(self) -> dict:
        """Per-feature conjunction of the literal domains."""
        out: dict = {}
        for lit in self.literals:
            dom = lit.domain
            prev = out.get(lit.feature_id)
            out[lit.feature_id] = dom if prev is None else prev.intersect(dom)
        return out

    @cached_property
    def consistent(self) -> bool:
        return all(not d.is_empty() for d in self.domains.values())

    @property
    def features(self) -> frozenset:
        return frozenset(self.domains)

    def domain_of(self, feature_id: int) -> DomainSubset:
        dom = self.domains.get(feature_id)
        return dom if dom is not None else DomainSubset.full(self.schema.feature(feature_id))

    @cached_property
    def is_complete(self) -> bool:
        if len(self.domains) != len(self.schema):
            return False
        return all(d.size() == 1 for d in self.domains.values())

    def values(self) -> tuple:
        """Feature values of a complete assignment, in feature-id order."""
        if not self.is_complete:
            raise PedtError("assignment is not a complete point")
        return tuple(self.domains[i].smallest_point() for i in self.schema.ids)

    def joint_domains(self, other: 'PartialAssignment') -> dict:
        out = dict(self.domains)
        for fid, dom in other.domains.items():
            out[fid] = out[fid].intersect(dom) if fid in out else dom
        return out

    def union(self, other: 'PartialAssignment') -> 'PartialAssignment':
        if other.schema != self.schema:
            raise SchemaMismatchError("assignments over different schemas")
        return PartialAssignment(self.schema, self.literals + other.literals)

    def without(self, feature_ids: Iterable[int]) -> 'PartialAssignment':
        drop = set(feature_ids)
        return PartialAssignment(
            self.schema, tuple(l for l in self.literals if l.feature_id not in drop))

    def restrict(self, feature_ids: Iterable[int]) -> 'PartialAssignment':
        keep = set(feature_ids)
        return PartialAssignment(
            self.schema, tuple(l for l in self.literals if l.feature_id in keep))

    def smallest_point(self, extra: Optional[dict] = None) -> 'PartialAssignment':
        """Complete point inside dom(self) (and `extra` domains), smallest per feature."""
        doms = dict(self.domains)
        for fid, dom in (extra or {}).items():
            doms[fid] = doms[fid].intersect(dom) if fid in doms else dom
        values = []
        for f in self.schema:
            dom = doms.get(f.id, DomainSubset.full(f))
            values.append(dom.smallest_point())
        return PartialAssignment.from_point(self.schema, values)

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __str__(self) -> str:
        return "{" + ",".join(str(l) for l in self.literals) + "}"
