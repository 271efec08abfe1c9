import itertools
import random
import unittest
from fractions import Fraction
from math import factorial

from hypothesis import given, settings

from gen.families import boolean_schema, running_examples, worst_case
from gen.random_trees import equivalent_variant, random_tree
from model.assignment import PartialAssignment
from model.errors import CapExceededError, PreconditionError
from oracle.space import EnumerableSpace
from shapley.scores import char_fn, corrected_shap
from tests.strategies import seeds, trees


def permutation_shap(tree, instance) -> list:
    """Average marginal contribution over every feature ordering."""
    ids = list(tree.schema.ids)
    totals = [Fraction(0)] * len(ids)
    for order in itertools.permutations(ids):
        fixed = []
        before = char_fn(tree, instance, fixed)
        for fid in order:
            fixed.append(fid)
            after = char_fn(tree, instance, fixed)
            totals[fid - 1] += after - before
            before = after
    return [t / factorial(len(ids)) for t in totals]


class TestCharacteristicFunction(unittest.TestCase):
    def test_running_example(self):
        t1 = running_examples()[0]
        point = PartialAssignment.from_point(t1.schema, [0, 1])
        instance = (point, "1")
        self.assertEqual(char_fn(t1, instance, []), 0)
        self.assertEqual(char_fn(t1, instance, [1]), 0)
        self.assertEqual(char_fn(t1, instance, [2]), 1)
        self.assertEqual(char_fn(t1, instance, [1, 2]), 1)

    def test_wrong_class(self):
        t1 = running_examples()[0]
        point = PartialAssignment.from_point(t1.schema, [0, 1])
        with self.assertRaises(PreconditionError):
            char_fn(t1, (point, "0"), [])


class TestCorrectedShap(unittest.TestCase):
    def test_running_example(self):
        t1 = running_examples()[0]
        point = PartialAssignment.from_point(t1.schema, [0, 1])
        scores = corrected_shap(t1, (point, "1"))
        self.assertEqual(list(scores.scores), [Fraction(0), Fraction(1)])
        self.assertEqual(scores.to_dict()["x2"], {"exact": "1", "approx": 1.0})

    def test_symmetric_features(self):
        t1 = running_examples()[0]
        for values, label in (([1, 1], "1"), ([0, 0], "0")):
            point = PartialAssignment.from_point(t1.schema, values)
            self.assertEqual(list(corrected_shap(t1, (point, label)).scores), [Fraction(1, 2)] * 2)

    def test_equivalent_trees_share_scores(self):
        t1, t2, _ = running_examples()
        for values in EnumerableSpace(t1.schema):
            point = PartialAssignment.from_point(t1.schema, values)
            label = t1.predict(values)
            self.assertEqual(corrected_shap(t1, (point, label)), corrected_shap(t2, (point, label)))

    def test_equivalent_variants_share_scores(self):
        for seed in range(20):
            schema = boolean_schema(7 + seed % 2)
            tree = random_tree(schema, 4 + seed % 3, seed)
            variant = equivalent_variant(tree, seed, steps=4)
            points = random.Random(seed).sample(list(EnumerableSpace(schema)), 100)
            for values in points:
                point = PartialAssignment.from_point(schema, values)
                label = tree.predict(values)
                self.assertEqual(corrected_shap(tree, (point, label)), corrected_shap(variant, (point, label)),
                                 f"seed={seed} point={values}")

    def test_efficiency(self):
        tree = worst_case(2)
        point = PartialAssignment.from_point(tree.schema, [1, 1, 0, 1, 0])
        scores = corrected_shap(tree, (point, tree.predict(point.values())))
        self.assertEqual(sum(scores.scores), 1)

    def test_caps(self):
        tree = worst_case(2)
        point = PartialAssignment.from_point(tree.schema, [1] * 5)
        with self.assertRaises(CapExceededError):
            corrected_shap(tree, (point, "1"), cap=4)

    def test_parallel_matches_serial(self):
        tree = worst_case(2)
        point = PartialAssignment.from_point(tree.schema, [1] * 5)
        self.assertEqual(corrected_shap(tree, (point, "1")), corrected_shap(tree, (point, "1"), jobs=2))

    @settings(max_examples=40, deadline=None)
    @given(tree=trees(), seed=seeds)
    def test_matches_permutation_definition(self, tree, seed):
        points = list(EnumerableSpace(tree.schema))
        values = points[seed % len(points)]
        point = PartialAssignment.from_point(tree.schema, values)
        instance = (point, tree.predict(values))
        self.assertEqual(list(corrected_shap(tree, instance).scores), permutation_shap(tree, instance))


if __name__ == '__main__':
    unittest.main()
