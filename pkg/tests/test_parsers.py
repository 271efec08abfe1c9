import json
import os
import tempfile
import unittest

from gen.families import boolean_schema, running_examples
from model.assignment import PartialAssignment
from model.documents import serialize, serialize_assignment
from model.errors import DocumentError, PreconditionError
from model.literals import Operator
from parsers.assignment_parser import (
    load_assignment,
    load_point,
    load_tree,
    parse_inline_assignment,
)
from tests.test_model import mixed_schema


class TestInlineAssignment(unittest.TestCase):
    def test_boolean_shorthand(self):
        schema = boolean_schema(2)
        a = parse_inline_assignment("{x1:0,x2:1}", schema)
        self.assertEqual(a, PartialAssignment.from_point(schema, [0, 1]))

    def test_empty(self):
        self.assertEqual(len(parse_inline_assignment("{}", boolean_schema(2))), 0)

    def test_sets_and_comparisons(self):
        schema = mixed_schema()
        a = parse_inline_assignment("{color:{red, blue}, age<=30, temp > 2.5}", schema)
        ops = {lit.feature.name: lit.op for lit in a}
        self.assertEqual(ops, {"color": Operator.IN, "age": Operator.LE, "temp": Operator.GT})
        self.assertEqual(a.domain_of(2).values, frozenset({"red", "blue"}))
        self.assertEqual(a.domain_of(3).size(), 31)

    def test_unknown_feature(self):
        with self.assertRaises(DocumentError) as ctx:
            parse_inline_assignment("{x1:0,x9:1}", boolean_schema(2))
        self.assertIn("x9", str(ctx.exception))

    def test_garbage(self):
        with self.assertRaises(DocumentError):
            parse_inline_assignment("{x1 0}", boolean_schema(2))
        with self.assertRaises(DocumentError):
            parse_inline_assignment("x1:0", boolean_schema(2))


class TestLoaders(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.tree = running_examples()[0]

    def _write(self, name, data):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(data if isinstance(data, str) else json.dumps(data))
        return path

    def test_load_tree(self):
        self.assertEqual(load_tree(self._write("t1.json", serialize(self.tree))), self.tree)

    def test_invalid_json(self):
        with self.assertRaises(DocumentError):
            load_tree(self._write("broken.json", "{nodes: ["))

    def test_assignment_sources_agree(self):
        schema = self.tree.schema
        expected = PartialAssignment.from_mapping(schema, {2: 1})
        path = self._write("a.json", serialize_assignment(expected))
        self.assertEqual(load_assignment(path, schema), expected)
        self.assertEqual(load_assignment('[{"feature": 2, "op": "eq", "value": 1}]', schema), expected)
        self.assertEqual(load_assignment("{x2:1}", schema), expected)

    def test_point_from_values(self):
        point = load_point("0,1", self.tree.schema)
        self.assertEqual(point.values(), (0, 1))

    def test_point_must_be_complete(self):
        with self.assertRaises(PreconditionError):
            load_point("{x1:0}", self.tree.schema)


if __name__ == '__main__':
    unittest.main()
