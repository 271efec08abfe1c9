"""Model package: features, literals, assignments, decision trees and documents."""

from .domains import DomainKind, DomainSubset, FeatureSchema, Interval
from .literals import Literal, Operator, make_literal
from .assignment import PartialAssignment, Schema
from .tree import DecisionTree, Edge, InternalNode, LeafNode, Path, classify, paths_of
from .validation import ValidationReport, Violation, validate
from .documents import (
    deserialize,
    deserialize_assignment,
    serialize,
    serialize_assignment,
)
from .errors import (
    CapExceededError,
    DocumentError,
    LiteralError,
    PedtError,
    PreconditionError,
    SchemaMismatchError,
    StructuralError,
    TermCapExceededError,
    UnknownClassError,
    UnsupportedSchemaError,
)


__all__ = [
    'DomainKind', 'DomainSubset', 'FeatureSchema', 'Interval',
    'Literal', 'Operator', 'make_literal',
    'PartialAssignment', 'Schema',
    'DecisionTree', 'Edge', 'InternalNode', 'LeafNode', 'Path', 'classify', 'paths_of',
    'ValidationReport', 'Violation', 'validate',
    'serialize', 'deserialize', 'serialize_assignment', 'deserialize_assignment',
    'PedtError', 'StructuralError', 'DocumentError', 'LiteralError', 'PreconditionError',
    'SchemaMismatchError', 'UnknownClassError', 'UnsupportedSchemaError',
    'CapExceededError', 'TermCapExceededError',
]
