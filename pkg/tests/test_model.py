import copy
import unittest

from gen.families import boolean_schema, running_examples, worst_case
from model.assignment import PartialAssignment, Schema
from model.documents import deserialize, deserialize_assignment, serialize, serialize_assignment
from model.domains import DomainKind, DomainSubset, FeatureSchema, Interval
from model.errors import DocumentError, LiteralError, PedtError, PreconditionError, StructuralError
from model.literals import Operator, make_literal
from model.tree import DecisionTree, Edge, InternalNode, LeafNode, classify, paths_of
from model.validation import ARITY, COVERAGE, DISJOINTNESS, INCONSISTENT_PATH, validate


def mixed_schema() -> Schema:
    return Schema((
        FeatureSchema(1, "flag", DomainKind.BOOLEAN),
        FeatureSchema(2, "color", DomainKind.CATEGORICAL, values=("red", "green", "blue")),
        FeatureSchema(3, "age", DomainKind.ORDINAL_INT, lo=0, hi=100),
        FeatureSchema(4, "temp", DomainKind.ORDINAL_REAL, lo=0.0, hi=10.0),
    ))


def mixed_tree() -> DecisionTree:
    schema = mixed_schema()
    age, color, temp = schema.feature(3), schema.feature(2), schema.feature(4)
    nodes = (
        InternalNode(1, 3, (Edge(make_literal(age, "le", 30), 2), Edge(make_literal(age, "gt", 30), 3))),
        InternalNode(2, 4, (Edge(make_literal(temp, "le", 2.5), 4), Edge(make_literal(temp, "gt", 2.5), 5))),
        InternalNode(3, 2, (Edge(make_literal(color, "in", ["red"]), 6),
                            Edge(make_literal(color, "in", ["green", "blue"]), 7))),
        LeafNode(4, "yes"), LeafNode(5, "no"), LeafNode(6, "no"), LeafNode(7, "yes"),
    )
    return DecisionTree(schema, ("yes", "no"), nodes, 1)


class TestDomains(unittest.TestCase):
    def test_integer_intervals_close_open_ends(self):
        age = mixed_schema().feature(3)
        gt = make_literal(age, "gt", 30).domain
        self.assertTrue(gt.contains(31))
        self.assertFalse(gt.contains(30))
        self.assertEqual(gt.size(), 70)

    def test_real_point_intersection_is_exact(self):
        temp = mixed_schema().feature(4)
        le = make_literal(temp, "le", 2.5).domain
        gt = make_literal(temp, "gt", 2.5).domain
        ge = make_literal(temp, "ge", 2.5).domain
        self.assertTrue(le.disjoint(gt))
        self.assertFalse(le.disjoint(ge))
        self.assertEqual(le.intersect(ge).intervals, (Interval(2.5, 2.5),))

    def test_union_and_subset(self):
        color = mixed_schema().feature(2)
        red = DomainSubset.of_values(color, ["red"])
        rest = DomainSubset.of_values(color, ["green", "blue"])
        self.assertEqual(red.union(rest), DomainSubset.full(color))
        self.assertTrue(red.issubset(DomainSubset.full(color)))

    def test_bad_feature_domains(self):
        with self.assertRaises(PedtError):
            FeatureSchema(1, "c", DomainKind.CATEGORICAL, values=())
        with self.assertRaises(PedtError):
            FeatureSchema(1, "a", DomainKind.ORDINAL_INT, lo=5, hi=1)

    def test_schema_ids_must_be_contiguous(self):
        with self.assertRaises(PedtError):
            Schema((FeatureSchema(2, "x2", DomainKind.BOOLEAN),))


class TestLiterals(unittest.TestCase):
    def test_eq_on_valued_feature_becomes_singleton_in(self):
        lit = make_literal(boolean_schema(2).feature(2), Operator.EQ, "1")
        self.assertEqual(lit.op, Operator.IN)
        self.assertEqual(lit.operand, frozenset({1}))
        self.assertEqual(str(lit), "(x2,1)")

    def test_value_outside_domain(self):
        with self.assertRaises(LiteralError):
            make_literal(mixed_schema().feature(2), "in", ["purple"])
        with self.assertRaises(LiteralError):
            make_literal(mixed_schema().feature(3), "le", 101)

    def test_ordering_on_categorical_rejected(self):
        with self.assertRaises(LiteralError):
            make_literal(mixed_schema().feature(2), "lt", "red")

    def test_unknown_op_token(self):
        with self.assertRaises(LiteralError) as ctx:
            make_literal(mixed_schema().feature(3), "between", 3)
        self.assertIn("unknown op token", str(ctx.exception))


class TestAssignments(unittest.TestCase):
    def test_conjunction_on_one_feature(self):
        schema = mixed_schema()
        age = schema.feature(3)
        a = PartialAssignment(schema, (make_literal(age, "ge", 10), make_literal(age, "lt", 20)))
        self.assertTrue(a.consistent)
        self.assertEqual(a.domain_of(3).size(), 10)
        b = a.union(PartialAssignment(schema, (make_literal(age, "gt", 50),)))
        self.assertFalse(b.consistent)

    def test_point_values_and_completeness(self):
        schema = boolean_schema(3)
        p = PartialAssignment.from_point(schema, [1, 0, 1])
        self.assertTrue(p.is_complete)
        self.assertEqual(p.values(), (1, 0, 1))
        self.assertFalse(p.without([2]).is_complete)
        with self.assertRaises(PedtError):
            p.without([2]).values()

    def test_smallest_point_respects_extra_domains(self):
        schema = boolean_schema(2)
        a = PartialAssignment.from_mapping(schema, {1: 0})
        b = PartialAssignment.from_mapping(schema, {2: 1})
        self.assertEqual(a.smallest_point(extra=b.domains).values(), (0, 1))

    def test_literal_order_is_canonical(self):
        schema = boolean_schema(3)
        a = PartialAssignment.from_mapping(schema, {"x3": 1, "x1": 0})
        b = PartialAssignment.from_mapping(schema, {1: 0, 3: 1})
        self.assertEqual(a, b)
        self.assertEqual(str(a), "{(x1,0),(x3,1)}")


class TestTree(unittest.TestCase):
    def test_running_example_paths(self):
        t1, _, _ = running_examples()
        paths = t1.paths
        self.assertEqual([p.nodes for p in paths], [(1, 2, 4), (1, 2, 5), (1, 3)])
        self.assertEqual([p.label for p in paths], ["0", "1", "1"])
        self.assertEqual(str(paths[2].literals), "{(x1,1)}")
        self.assertEqual([p.nodes for p in paths_of(mixed_tree())], [(1, 2, 4), (1, 2, 5), (1, 3, 6), (1, 3, 7)])

    def test_classify(self):
        t1, _, t3 = running_examples()
        for values, expected in (((0, 0), "0"), ((0, 1), "1"), ((1, 0), "1"), ((1, 1), "1")):
            point = PartialAssignment.from_point(t1.schema, values)
            self.assertEqual(classify(t1, point), expected)
        self.assertEqual(classify(t3, PartialAssignment.from_point(t3.schema, (0, 0))), "1")

    def test_classify_needs_complete_point(self):
        t1, _, _ = running_examples()
        with self.assertRaises(PreconditionError):
            classify(t1, PartialAssignment.from_mapping(t1.schema, {1: 0}))

    def test_mixed_tree(self):
        tree = mixed_tree()
        self.assertEqual(tree.predict(["1", "blue", 45, 9.0]), "yes")
        self.assertEqual(tree.predict([0, "red", 31, 0.0]), "no")
        self.assertEqual(tree.predict([0, "red", 30, 2.5]), "yes")
        self.assertEqual(tree.depth(), 2)

    def test_structural_errors(self):
        schema = boolean_schema(1)
        x1 = schema.feature(1)
        with self.assertRaises(StructuralError):
            DecisionTree(schema, ("0", "1"), (
                InternalNode(1, 1, (Edge(make_literal(x1, "eq", 0), 2), Edge(make_literal(x1, "eq", 1), 9))),
                LeafNode(2, "0")), 1)
        with self.assertRaises(StructuralError):
            DecisionTree(schema, ("0", "1"), (LeafNode(1, "2"),), 1)
        with self.assertRaises(StructuralError):
            DecisionTree(schema, ("0",), (LeafNode(1, "0"), LeafNode(2, "0")), 1)


class TestValidation(unittest.TestCase):
    def _tree(self, edges_root, extra_nodes):
        schema = boolean_schema(2)
        return DecisionTree(schema, ("0", "1"), (InternalNode(1, 1, edges_root),) + extra_nodes, 1)

    def test_valid_trees(self):
        for tree in running_examples() + (worst_case(3), mixed_tree()):
            self.assertTrue(validate(tree).ok)

    def test_overlapping_edges(self):
        x1 = boolean_schema(2).feature(1)
        tree = self._tree((Edge(make_literal(x1, "in", [0, 1]), 2), Edge(make_literal(x1, "in", [1]), 3)),
                          (LeafNode(2, "0"), LeafNode(3, "1")))
        report = validate(tree)
        self.assertEqual(len(report.of_kind(DISJOINTNESS)), 1)
        self.assertFalse(report.of_kind(COVERAGE))

    def test_single_edge_is_arity_and_coverage(self):
        x1 = boolean_schema(2).feature(1)
        tree = self._tree((Edge(make_literal(x1, "in", [0]), 2),), (LeafNode(2, "0"),))
        report = validate(tree)
        self.assertTrue(report.of_kind(ARITY))
        self.assertTrue(report.of_kind(COVERAGE))

    def test_inconsistent_path(self):
        schema = boolean_schema(2)
        x1 = schema.feature(1)
        tree = self._tree(
            (Edge(make_literal(x1, "in", [0]), 2), Edge(make_literal(x1, "in", [1]), 3)),
            (InternalNode(2, 1, (Edge(make_literal(x1, "in", [1]), 4), Edge(make_literal(x1, "in", [0]), 5))),
             LeafNode(3, "1"), LeafNode(4, "1"), LeafNode(5, "0")))
        report = validate(tree)
        kinds = {v.kind for v in report.violations}
        self.assertEqual(kinds, {INCONSISTENT_PATH})
        self.assertEqual(report.violations[0].node, 4)

    def test_real_gap_is_a_coverage_violation(self):
        schema = Schema((FeatureSchema(1, "t", DomainKind.ORDINAL_REAL, lo=0.0, hi=1.0),))
        t = schema.feature(1)
        tree = DecisionTree(schema, ("a", "b"), (
            InternalNode(1, 1, (Edge(make_literal(t, "lt", 0.5), 2), Edge(make_literal(t, "gt", 0.5), 3))),
            LeafNode(2, "a"), LeafNode(3, "b")), 1)
        self.assertEqual(len(validate(tree).of_kind(COVERAGE)), 1)


class TestDocuments(unittest.TestCase):
    def test_round_trip(self):
        for tree in running_examples() + (worst_case(2), mixed_tree()):
            self.assertEqual(deserialize(serialize(tree)), tree)

    def test_assignment_round_trip(self):
        schema = mixed_schema()
        a = PartialAssignment(schema, (
            make_literal(schema.feature(2), "in", ["blue", "red"]),
            make_literal(schema.feature(3), "le", 40),
        ))
        doc = serialize_assignment(a)
        self.assertEqual(doc["literals"][0]["values"], ["red", "blue"])
        self.assertEqual(deserialize_assignment(doc, schema), a)
        self.assertEqual(deserialize_assignment(doc["literals"], schema), a)

    def test_unknown_op_names_its_location(self):
        doc = serialize(running_examples()[0])
        doc["nodes"][0]["edges"][0]["literal"]["op"] = "equals"
        with self.assertRaises(DocumentError) as ctx:
            deserialize(doc)
        self.assertTrue(any(d.startswith("nodes.0.edges.0.literal.op") for d in ctx.exception.details))
        self.assertIn("unknown op token", str(ctx.exception))

    def test_unknown_class_label(self):
        doc = serialize(running_examples()[0])
        doc["nodes"][-1]["class"] = "2"
        with self.assertRaises(DocumentError) as ctx:
            deserialize(doc)
        self.assertIn("absent from classes list", str(ctx.exception))

    def test_version_and_extra_fields(self):
        doc = serialize(running_examples()[0])
        bad_version = copy.deepcopy(doc)
        bad_version["format_version"] = 2
        with self.assertRaises(DocumentError):
            deserialize(bad_version)
        extra = copy.deepcopy(doc)
        extra["comment"] = "hi"
        with self.assertRaises(DocumentError):
            deserialize(extra)

    def test_literal_outside_domain(self):
        doc = serialize(running_examples()[0])
        doc["nodes"][0]["edges"][0]["literal"]["values"] = [7]
        with self.assertRaises(DocumentError) as ctx:
            deserialize(doc)
        self.assertIn("nodes.0.edges.0.literal", str(ctx.exception))

    def test_dangling_child_is_structural(self):
        doc = serialize(running_examples()[0])
        doc["nodes"][0]["edges"][1]["child"] = 42
        with self.assertRaises(StructuralError):
            deserialize(doc)


if __name__ == '__main__':
    unittest.main()
