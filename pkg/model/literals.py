"""Literals: (feature, operator, operand) constraints over one feature."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Union

from model.domains import DomainKind, DomainSubset, FeatureSchema, Interval
from model.errors import LiteralError


class Operator(str, Enum):
    IN = "in"
    EQ = "eq"
    LT = "lt"
    LE = "le"
    GT = "gt"
    GE = "ge"

    @classmethod
    def parse(cls, token: str) -> 'Operator':
        try:
            return cls(token)
        except ValueError:
            tokens = ", ".join(op.value for op in cls)
            raise LiteralError(f"unknown op token {token!r} (expected one of {tokens})")


COMPARISON_SYMBOLS = {
    Operator.LT: "<",
    Operator.LE: "<=",
    Operator.GT: ">",
    Operator.GE: ">=",
}

_OP_RANK = {op: i for i, op in enumerate(Operator)}


@dataclass(frozen=True)
class Literal:
    """A constraint on one feature.

    `operand` is a frozenset for IN and a scalar otherwise. EQ on boolean or
    categorical features never survives construction through `make_literal`:
    it is rewritten to IN with a singleton set.
    """

    feature: FeatureSchema
    op: Operator
    operand: Union[frozenset, int, float, str]

    @property
    def feature_id(self) -> int:
        return self.feature.id

    @cached_property
    def domain(self) -> DomainSubset:
        f = self.feature
        if self.op == Operator.IN:
            return DomainSubset.of_values(f, self.operand)
        if self.op == Operator.EQ:
            return DomainSubset.of_values(f, [self.operand])
        if f.is_valued:
            kept = [v for v in f.values if _compare(v, self.op, self.operand)]
            return DomainSubset.of_values(f, kept)
        v = self.operand
        if self.op == Operator.LT:
            iv = Interval(f.lo, v, True, False)
        elif self.op == Operator.LE:
            iv = Interval(f.lo, v, True, True)
        elif self.op == Operator.GT:
            iv = Interval(v, f.hi, False, True)
        else:
            iv = Interval(v, f.hi, True, True)
        return DomainSubset.of_intervals(f, [iv])

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.feature.id, self.feature.name, self.op, self.operand))

    def __getstate__(self):
        # string hashes are per-process; recompute after unpickling
        state = dict(self.__dict__)
        state.pop("_hash", None)
        return state

    def sort_key(self) -> tuple:
        return self._sort_key

    @cached_property
    def _sort_key(self) -> tuple:
        if self.op == Operator.IN:
            order = {v: i for i, v in enumerate(self.feature.values)}
            operand = tuple(sorted(order.get(v, v) for v in self.operand))
        else:
            operand = (self.operand,)
        return (self.feature.id, _OP_RANK[self.op], str(operand))

    def ordered_values(self) -> list:
        if self.feature.is_valued:
            return [v for v in self.feature.values if v in self.operand]
        return sorted(self.operand)

    def __str__(self) -> str:
        name = self.feature.name
        if self.op == Operator.IN:
            values = self.ordered_values()
            if len(values) == 1:
                return f"({name},{values[0]})"
            return f"({name},{{{','.join(str(v) for v in values)}}})"
        if self.op == Operator.EQ:
            return f"({name},{self.operand})"
        return f"({name}{COMPARISON_SYMBOLS[self.op]}{self.operand})"


def _compare(value, op: Operator, operand) -> bool:
    if op == Operator.LT:
        return value < operand
    if op == Operator.LE:
        return value <= operand
    if op == Operator.GT:
        return value > operand
    return value >= operand


def coerce_value(feature: FeatureSchema, value):
    """Map a document or CLI value onto the feature's value type."""
    if feature.is_valued:
        if feature.kind == DomainKind.BOOLEAN:
            if isinstance(value, str) and value.strip().lower() in ("0", "1", "true", "false"):
                return 1 if value.strip().lower() in ("1", "true") else 0
            if isinstance(value, (bool, int, float)) and value in (0, 1):
                return int(value)
            return value
        return str(value)
    if isinstance(value, str):
        try:
            number = float(value)
        except ValueError:
            return value
        return int(number) if number.is_integer() and feature.kind == DomainKind.ORDINAL_INT else number
    return value


def make_literal(feature: FeatureSchema, op: Union[Operator, str], operand) -> Literal:
    """Build a validated, normalized literal.

    Raises:
        LiteralError: operand outside the domain, empty IN set, or an
            ordering operator on a categorical feature.
    """
    if not isinstance(op, Operator):
        op = Operator.parse(op)

    if op == Operator.IN:
        if isinstance(operand, (str, int, float)):
            operand = [operand]
        values = [coerce_value(feature, v) for v in operand]
        if not values:
            raise LiteralError(f"{feature.name}: empty value set for 'in'")
        for v in values:
            if not feature.contains(v):
                raise LiteralError(f"{feature.name}: value {v!r} outside the domain")
        return Literal(feature, Operator.IN, frozenset(values))

    value = coerce_value(feature, operand)
    if not feature.contains(value):
        raise LiteralError(f"{feature.name}: value {value!r} outside the domain")
    if op == Operator.EQ:
        if feature.is_valued:
            return Literal(feature, Operator.IN, frozenset([value]))
        return Literal(feature, Operator.EQ, value)
    if feature.kind == DomainKind.CATEGORICAL:
        raise LiteralError(f"{feature.name}: operator {op.value!r} needs an ordered domain")
    return Literal(feature, op, value)
