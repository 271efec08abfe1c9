import unittest

from hypothesis import given, settings

from equiv.bitsets import PathPacker
from equiv.decide import (
    CONSISTENT,
    INCONSISTENT,
    SAME_CLASS,
    check_comparable,
    conflict_matrix,
    decide,
    disprove_by_axps,
)
from explain.waxp import domains_consistent
from gen.families import boolean_schema, example_function_trees, running_examples, worst_case
from gen.random_trees import equivalent_variant, mutate_leaf, random_tree
from model.assignment import PartialAssignment
from model.errors import PreconditionError, SchemaMismatchError
from model.tree import classify
from oracle.brute import brute_equivalent
from tests.strategies import seeds, trees
from tests.test_model import mixed_tree


class TestDecide(unittest.TestCase):
    def test_running_examples(self):
        t1, t2, t3 = running_examples()
        self.assertTrue(decide(t1, t2).equivalent)
        verdict = decide(t1, t3)
        self.assertFalse(verdict.equivalent)
        w = verdict.witness
        self.assertEqual((w.path1.nodes, w.path2.nodes), ((1, 2, 4), (1, 2, 4)))
        self.assertEqual(w.point.values(), (0, 0))
        self.assertEqual(verdict.pairs_checked, 1)

    def test_example_function_trees(self):
        fa, fb = example_function_trees()
        self.assertTrue(decide(fa, fb).equivalent)

    def test_gadget_and_twin(self):
        tree = worst_case(4)
        twin = mutate_leaf(tree)
        verdict = decide(tree, twin)
        self.assertFalse(verdict.equivalent)
        point = verdict.witness.point
        self.assertEqual(point.values(), (1,) * 9)
        self.assertNotEqual(classify(tree, point), classify(twin, point))

    def test_mutated_variant(self):
        t1 = running_examples()[0]
        variant = equivalent_variant(t1, seed=5, steps=6)
        verdict = decide(mutate_leaf(variant), t1)
        self.assertFalse(verdict.equivalent)
        self.assertIn(verdict.witness.path2, t1.paths)
        self.assertNotEqual(verdict.witness.path1.label, verdict.witness.path2.label)

    def test_real_features(self):
        tree = mixed_tree()
        self.assertTrue(decide(tree, tree).equivalent)
        twin = mutate_leaf(tree)
        verdict = decide(tree, twin)
        self.assertFalse(verdict.equivalent)
        point = verdict.witness.point
        self.assertNotEqual(tree.predict(point.values()), twin.predict(point.values()))

    def test_incomparable_trees(self):
        with self.assertRaises(SchemaMismatchError):
            decide(running_examples()[0], worst_case(1))

    def test_parallel_matches_serial(self):
        tree = worst_case(40)
        twin = mutate_leaf(tree)
        serial, parallel = decide(tree, twin), decide(tree, twin, jobs=2)
        self.assertEqual(serial.witness, parallel.witness)
        self.assertTrue(decide(tree, tree, jobs=2).equivalent)


class TestConflictMatrix(unittest.TestCase):
    def test_running_examples(self):
        t1, t2, t3 = running_examples()
        self.assertEqual(conflict_matrix(t1, t3), [
            [CONSISTENT, SAME_CLASS, INCONSISTENT],
            [SAME_CLASS, CONSISTENT, SAME_CLASS],
            [SAME_CLASS, INCONSISTENT, SAME_CLASS],
        ])
        self.assertNotIn(CONSISTENT, [c for row in conflict_matrix(t1, t2) for c in row])

    def test_check_comparable_on_classes(self):
        t1 = running_examples()[0]
        other = random_tree(t1.schema, 2, seed=1, classes=("0", "1", "2"))
        with self.assertRaises(SchemaMismatchError):
            check_comparable(t1, other)


class TestDisproveByAxps(unittest.TestCase):
    def setUp(self):
        self.t1, _, self.t3 = running_examples()
        self.schema = self.t1.schema

    def test_certificate(self):
        a1 = PartialAssignment.from_mapping(self.schema, {2: 1})
        a3 = PartialAssignment.from_mapping(self.schema, {1: 0, 2: 1})
        cert = disprove_by_axps((a1, "1"), (a3, "0"), self.t1, self.t3)
        self.assertEqual(cert.point.values(), (0, 1))
        self.assertEqual((cert.label1, cert.label2), ("1", "0"))

    def test_disjoint_explanations(self):
        a = PartialAssignment.from_mapping(self.schema, {1: 1})
        b = PartialAssignment.from_mapping(self.schema, {1: 0, 2: 0})
        self.assertIsNone(disprove_by_axps((a, "1"), (b, "0")))

    def test_preconditions(self):
        a = PartialAssignment.from_mapping(self.schema, {2: 1})
        with self.assertRaises(PreconditionError):
            disprove_by_axps((a, "1"), (a, "1"))
        with self.assertRaises(PreconditionError):
            disprove_by_axps((a, "0"), (a, "1"), self.t1, self.t3)


class TestPacking(unittest.TestCase):
    @settings(max_examples=100, deadline=None)
    @given(t1=trees(schemas=("mixed",)), seed=seeds)
    def test_masks_agree_with_domains(self, t1, seed):
        t2 = random_tree(t1.schema, 4, seed)
        packer = PathPacker(t1.schema)
        for p in t1.paths:
            for q in t2.paths:
                self.assertEqual(packer.consistent(packer.mask(p), packer.mask(q)),
                                 domains_consistent(p.domains, q.domains))


class TestAgainstOracle(unittest.TestCase):
    @settings(max_examples=150, deadline=None)
    @given(t1=trees(), seed=seeds)
    def test_random_pairs(self, t1, seed):
        t2 = random_tree(t1.schema, 3, seed)
        verdict = decide(t1, t2)
        self.assertEqual(verdict.equivalent, brute_equivalent(t1, t2))
        if not verdict.equivalent:
            point = verdict.witness.point
            self.assertEqual(classify(t1, point), verdict.witness.path1.label)
            self.assertEqual(classify(t2, point), verdict.witness.path2.label)

    @settings(max_examples=100, deadline=None)
    @given(tree=trees(), seed=seeds)
    def test_variants_are_equivalent(self, tree, seed):
        variant = equivalent_variant(tree, seed)
        self.assertTrue(brute_equivalent(tree, variant))
        self.assertTrue(decide(tree, variant).equivalent)
        self.assertTrue(decide(variant, tree).equivalent)

    @settings(max_examples=100, deadline=None)
    @given(tree=trees())
    def test_mutants_are_not(self, tree):
        twin = mutate_leaf(tree)
        self.assertFalse(brute_equivalent(tree, twin))
        self.assertFalse(decide(tree, twin).equivalent)

    def test_seeded_sweep(self):
        kinds = {"random": 0, "mutated": 0, "variant": 0}
        for seed in range(1200):
            m = 2 + (seed // 3) % 9
            schema = boolean_schema(m)
            a = random_tree(schema, 2 + seed % 4, seed)
            if seed % 3 == 0:
                kind, b = "random", random_tree(schema, 2 + (seed // 3) % 4, seed + 100_000)
            elif seed % 3 == 1:
                kind, b = "mutated", mutate_leaf(a)
            else:
                kind, b = "variant", equivalent_variant(a, seed, steps=4)
            kinds[kind] += 1
            expected = brute_equivalent(a, b)
            forward, backward = decide(a, b), decide(b, a)
            self.assertEqual(forward.equivalent, expected, f"seed={seed} {kind}")
            self.assertEqual(backward.equivalent, expected, f"seed={seed} {kind} swapped")
            if kind == "mutated":
                self.assertFalse(expected)
            if kind == "variant":
                self.assertTrue(expected)
            if not expected:
                for verdict, first, second in ((forward, a, b), (backward, b, a)):
                    point = verdict.witness.point
                    self.assertNotEqual(classify(first, point), classify(second, point), f"seed={seed}")
        self.assertEqual(kinds, {"random": 400, "mutated": 400, "variant": 400})


if __name__ == '__main__':
    unittest.main()
