"""
Versioned JSON documents for trees and assignments.

The wire schema is described with pydantic models; `serialize` and
`deserialize` convert between those documents and the immutable model
types. Every parse failure surfaces as a `DocumentError` whose details name
the offending field by its dotted path.
"""

from typing import Literal as TypingLiteral
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from model.assignment import PartialAssignment, Schema
from model.domains import DomainKind, FeatureSchema
from model.errors import DocumentError, LiteralError, PedtError
from model.literals import Literal, Operator, make_literal
from model.tree import DecisionTree, Edge, InternalNode, LeafNode

FORMAT_VERSION = 1
OP_TOKENS = tuple(op.value for op in Operator)

Scalar = Union[int, float, str]


class DomainDoc(BaseModel):
    model_config = ConfigDict(extra='forbid')

    kind: TypingLiteral['boolean', 'categorical', 'ordinal_int', 'ordinal_real']
    values: Optional[list[str]] = None
    lo: Optional[Union[int, float]] = None
    hi: Optional[Union[int, float]] = None

    @model_validator(mode='after')
    def check_shape(self):
        if self.kind == 'categorical' and not self.values:
            raise ValueError("categorical domain needs a non-empty 'values' list")
        if self.kind in ('ordinal_int', 'ordinal_real'):
            if self.lo is None or self.hi is None:
                raise ValueError("ordinal domain needs 'lo' and 'hi'")
            if self.lo > self.hi:
                raise ValueError(f"ordinal domain has lo {self.lo} > hi {self.hi}")
        return self


class FeatureDoc(BaseModel):
    model_config = ConfigDict(extra='forbid')

    id: int
    name: str
    domain: DomainDoc


class LiteralDoc(BaseModel):
    model_config = ConfigDict(extra='forbid')

    feature: int
    op: str
    value: Optional[Scalar] = None
    values: Optional[list[Scalar]] = None

    @field_validator('op')
    @classmethod
    def known_op(cls, v: str) -> str:
        if v not in OP_TOKENS:
            raise ValueError(f"unknown op token {v!r} (expected one of {', '.join(OP_TOKENS)})")
        return v

    @model_validator(mode='after')
    def check_operand(self):
        if self.op == 'in':
            if self.values is None:
                raise ValueError("op 'in' needs a 'values' list")
            if not self.values:
                raise ValueError("op 'in' needs a non-empty 'values' list")
        elif self.value is None:
            raise ValueError(f"op {self.op!r} needs a 'value'")
        return self


class EdgeDoc(BaseModel):
    model_config = ConfigDict(extra='forbid')

    literal: LiteralDoc
    child: int


class NodeDoc(BaseModel):
    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    id: int
    kind: TypingLiteral['internal', 'leaf']
    feature: Optional[int] = None
    edges: Optional[list[EdgeDoc]] = None
    label: Optional[str] = Field(default=None, alias='class')

    @field_validator('label', mode='before')
    @classmethod
    def label_as_string(cls, v):
        return None if v is None else str(v)

    @model_validator(mode='after')
    def check_kind(self):
        if self.kind == 'internal':
            if self.feature is None or self.edges is None:
                raise ValueError("internal node needs 'feature' and 'edges'")
        elif self.label is None:
            raise ValueError("leaf node needs a 'class'")
        return self


class TreeDoc(BaseModel):
    model_config = ConfigDict(extra='forbid')

    format_version: TypingLiteral[1]
    features: list[FeatureDoc]
    classes: list[str]
    nodes: list[NodeDoc]
    root: int

    @field_validator('classes', mode='before')
    @classmethod
    def classes_as_strings(cls, v):
        return [str(c) for c in v] if isinstance(v, list) else v

    @model_validator(mode='after')
    def check_labels(self):
        known = set(self.classes)
        for node in self.nodes:
            if node.kind == 'leaf' and node.label not in known:
                raise ValueError(
                    f"node {node.id}: class label {node.label!r} absent from classes list")
        return self


class AssignmentDoc(BaseModel):
    model_config = ConfigDict(extra='forbid')

    format_version: TypingLiteral[1]
    literals: list[LiteralDoc]


def _details(err: ValidationError, prefix: str = '') -> list:
    out = []
    for e in err.errors():
        loc = '.'.join(str(p) for p in e['loc'])
        if prefix:
            loc = f"{prefix}.{loc}" if loc else prefix
        out.append(f"{loc or '<document>'}: {e['msg']}")
    return out


def _feature_from_doc(doc: FeatureDoc) -> FeatureSchema:
    kind = DomainKind(doc.domain.kind)
    if kind == DomainKind.CATEGORICAL:
        return FeatureSchema(doc.id, doc.name, kind, values=tuple(doc.domain.values))
    if kind == DomainKind.BOOLEAN:
        return FeatureSchema(doc.id, doc.name, kind)
    return FeatureSchema(doc.id, doc.name, kind, lo=doc.domain.lo, hi=doc.domain.hi)


def _feature_to_doc(f: FeatureSchema) -> dict:
    domain: dict = {'kind': f.kind.value}
    if f.kind == DomainKind.CATEGORICAL:
        domain['values'] = list(f.values)
    elif f.is_ordinal:
        domain['lo'] = f.lo
        domain['hi'] = f.hi
    return {'id': f.id, 'name': f.name, 'domain': domain}


def literal_from_doc(doc: LiteralDoc, schema: Schema) -> Literal:
    feature = schema.feature(doc.feature)
    operand = doc.values if doc.op == 'in' else doc.value
    return make_literal(feature, doc.op, operand)


def literal_to_doc(lit: Literal) -> dict:
    if lit.op == Operator.IN:
        return {'feature': lit.feature_id, 'op': 'in', 'values': lit.ordered_values()}
    return {'feature': lit.feature_id, 'op': lit.op.value, 'value': lit.operand}


def schema_from_docs(features: list) -> Schema:
    built = []
    for i, fdoc in enumerate(features):
        try:
            built.append(_feature_from_doc(fdoc))
        except PedtError as exc:
            raise DocumentError("invalid feature", [f"features.{i}: {exc}"])
    try:
        return Schema(tuple(built))
    except PedtError as exc:
        raise DocumentError("invalid feature schema", [f"features: {exc}"])


def serialize(tree: DecisionTree) -> dict:
    """Tree document (format_version 1) for a tree."""
    nodes = []
    for n in tree.nodes:
        if n.is_leaf:
            nodes.append({'id': n.id, 'kind': 'leaf', 'class': n.label})
        else:
            nodes.append({
                'id': n.id,
                'kind': 'internal',
                'feature': n.feature,
                'edges': [{'literal': literal_to_doc(e.literal), 'child': e.child}
                          for e in n.edges],
            })
    return {
        'format_version': FORMAT_VERSION,
        'features': [_feature_to_doc(f) for f in tree.schema],
        'classes': list(tree.classes),
        'nodes': nodes,
        'root': tree.root,
    }


def deserialize(document: dict) -> DecisionTree:
    """Tree from a tree document.

    Raises:
        DocumentError: schema violations, with dotted field paths.
        StructuralError: malformed node references.
    """
    try:
        doc = TreeDoc.model_validate(document)
    except ValidationError as exc:
        raise DocumentError("invalid tree document", _details(exc))

    schema = schema_from_docs(doc.features)
    nodes = []
    for i, ndoc in enumerate(doc.nodes):
        if ndoc.kind == 'leaf':
            nodes.append(LeafNode(ndoc.id, ndoc.label))
            continue
        edges = []
        for j, edoc in enumerate(ndoc.edges):
            try:
                edges.append(Edge(literal_from_doc(edoc.literal, schema), edoc.child))
            except (LiteralError, PedtError) as exc:
                raise DocumentError(
                    "invalid literal", [f"nodes.{i}.edges.{j}.literal: {exc}"])
        nodes.append(InternalNode(ndoc.id, ndoc.feature, tuple(edges)))
    return DecisionTree(schema, tuple(doc.classes), tuple(nodes), doc.root)


def serialize_assignment(assignment: PartialAssignment) -> dict:
    return {
        'format_version': FORMAT_VERSION,
        'literals': [literal_to_doc(l) for l in assignment.literals],
    }


def deserialize_assignment(document, schema: Schema) -> PartialAssignment:
    """Assignment from an assignment document (or a bare literal array)."""
    if isinstance(document, list):
        document = {'format_version': FORMAT_VERSION, 'literals': document}
    try:
        doc = AssignmentDoc.model_validate(document)
    except ValidationError as exc:
        raise DocumentError("invalid assignment document", _details(exc))
    literals = []
    for i, ldoc in enumerate(doc.literals):
        try:
            literals.append(literal_from_doc(ldoc, schema))
        except PedtError as exc:
            raise DocumentError("invalid literal", [f"literals.{i}: {exc}"])
    return PartialAssignment(schema, tuple(literals))
