import json
import os
import re

from model.assignment import PartialAssignment, Schema
from model.documents import deserialize, deserialize_assignment
from model.errors import DocumentError, LiteralError, PedtError, PreconditionError
from model.literals import Operator, make_literal
from model.tree import DecisionTree

INLINE_PATTERN = re.compile(r'^\s*\{(.*)\}\s*$', re.DOTALL)
PAIR_PATTERN = re.compile(r'\s*([^,{}<>=:\s]+)\s*(<=|>=|<|>|:|=)\s*(\{[^}]*\}|[^,{}]+?)\s*(?:,|$)')

SYMBOL_OPS = {
    ':': Operator.EQ,
    '=': Operator.EQ,
    '<': Operator.LT,
    '<=': Operator.LE,
    '>': Operator.GT,
    '>=': Operator.GE,
}


def load_json(file_path):
    """Reads a UTF-8 JSON file."""
    with open(file_path, 'r', encoding='utf-8') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise DocumentError(f"{file_path} is not valid JSON", [f"line {e.lineno}: {e.msg}"])


def load_tree(file_path) -> DecisionTree:
    return deserialize(load_json(file_path))


def parse_inline_assignment(text: str, schema: Schema) -> PartialAssignment:
    """
    Parses the inline shorthand:
    - "{x1:0,x2:1}"        → (x1,0), (x2,1)
    - "{color:{red,blue}}" → color ∈ {red, blue}
    - "{age<=30, x3>2.5}"  → ordinal comparisons
    - "{}"                 → empty assignment
    """
    match = INLINE_PATTERN.match(text)
    if not match:
        raise DocumentError(f"not an inline assignment: {text!r}", ["expected {name:value,...}"])
    body = match.group(1).strip()
    if not body:
        return PartialAssignment(schema, ())

    literals = []
    consumed = 0
    for pair in PAIR_PATTERN.finditer(body):
        if pair.start() != consumed:
            break
        consumed = pair.end()
        key, symbol, raw = pair.groups()
        try:
            feature = schema.resolve(key)
            if raw.startswith('{'):
                values = [v.strip() for v in raw[1:-1].split(',') if v.strip()]
                literals.append(make_literal(feature, Operator.IN, values))
            else:
                literals.append(make_literal(feature, SYMBOL_OPS[symbol], raw.strip()))
        except (LiteralError, PedtError) as e:
            raise DocumentError(f"invalid inline assignment {text!r}", [f"{key}: {e}"])

    if consumed != len(body):
        raise DocumentError(f"invalid inline assignment {text!r}",
                            [f"cannot parse near {body[consumed:]!r}"])
    return PartialAssignment(schema, tuple(literals))


def parse_point_values(text: str, schema: Schema) -> PartialAssignment:
    """Comma-separated values in feature-id order, e.g. "0,1,1"."""
    values = [v.strip() for v in text.split(',')]
    return PartialAssignment.from_point(schema, values)


def load_assignment(arg: str, schema: Schema) -> PartialAssignment:
    """
    Loads an assignment from a document file, a JSON string or the inline shorthand.
    """
    if os.path.exists(arg):
        return deserialize_assignment(load_json(arg), schema)
    stripped = arg.strip()
    if stripped.startswith('[') or stripped.startswith('{"'):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise DocumentError("assignment is not valid JSON", [e.msg])
        return deserialize_assignment(data, schema)
    if stripped.startswith('{'):
        return parse_inline_assignment(stripped, schema)
    return parse_point_values(stripped, schema)


def load_point(arg: str, schema: Schema) -> PartialAssignment:
    """Like load_assignment, but the result must fix every feature to one value."""
    point = load_assignment(arg, schema)
    if not point.is_complete:
        raise PreconditionError(f"{point} is not a complete point")
    return point
