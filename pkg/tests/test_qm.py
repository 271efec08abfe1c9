import unittest

from hypothesis import given, settings

from gen.families import EXAMPLE_FUNCTION_MINTERMS, boolean_schema, example_function_trees, running_examples, worst_case
from gen.random_trees import equivalent_variant, mutate_leaf, random_tree
from model.assignment import PartialAssignment
from model.errors import CapExceededError, TermCapExceededError, UnsupportedSchemaError
from oracle.brute import brute_all_axps
from oracle.space import EnumerableSpace
from qm.bcf import FIFO, LIFO, bcf
from qm.compare import bcf_equivalence, qm_equivalence
from qm.cover import LEX_HIGH, LEX_LOW, CostModel, TieBreak, all_minimum_covers, count_minimum_covers, minimize
from qm.terms import DnfKind, Term, class_terms, point_to_minterm
from tests.strategies import trees
from tests.test_model import mixed_tree
from writers.document_writer import format_dnf


def term(**literals) -> Term:
    return Term.from_literals({int(k[1:]): v for k, v in literals.items()})


class TestTerms(unittest.TestCase):
    def test_consensus(self):
        self.assertEqual(term(x1=0, x2=1).consensus(term(x1=1)), term(x2=1))
        self.assertIsNone(term(x1=0, x2=0).consensus(term(x1=1, x2=1)))
        self.assertIsNone(term(x1=1).consensus(term(x2=1)))

    def test_absorbs(self):
        self.assertTrue(term(x2=1).absorbs(term(x1=0, x2=1)))
        self.assertFalse(term(x1=0, x2=1).absorbs(term(x2=1)))

    def test_minterms_and_render(self):
        t = term(x1=1, x3=0)
        self.assertEqual(sorted(t.minterms(3)), [1, 3])
        self.assertEqual(t.render(), "x1 ~x3")
        self.assertEqual(Term().render(), "1")

    def test_class_terms(self):
        t1 = running_examples()[0]
        raw = class_terms(t1, "1")
        self.assertEqual(raw.kind, DnfKind.RAW)
        self.assertEqual(set(raw.terms), {term(x1=0, x2=1), term(x1=1)})

    def test_non_boolean_schema(self):
        with self.assertRaises(UnsupportedSchemaError):
            class_terms(mixed_tree(), "yes")


class TestBcf(unittest.TestCase):
    def test_running_example(self):
        t1 = running_examples()[0]
        dnf = bcf(class_terms(t1, "1"))
        self.assertEqual(dnf.kind, DnfKind.BCF)
        self.assertEqual(format_dnf(dnf), "x1\nx2")
        self.assertEqual(format_dnf(bcf(class_terms(t1, "0"))), "~x1 ~x2")

    def test_gadget_sizes(self):
        for r, expected in ((1, (2, 4)), (2, (3, 10)), (3, (4, 22)), (4, (5, 46)), (5, (6, 94))):
            tree = worst_case(r)
            sizes = (len(bcf(class_terms(tree, "0"))), len(bcf(class_terms(tree, "1"))))
            self.assertEqual(sizes, expected, f"r={r}")

    def test_term_cap(self):
        with self.assertRaises(TermCapExceededError):
            bcf(class_terms(worst_case(5), "1"), term_cap=10)

    def test_unknown_order(self):
        with self.assertRaises(ValueError):
            bcf(class_terms(running_examples()[0], "1"), order="random")

    @settings(max_examples=80, deadline=None)
    @given(tree=trees(schemas=("boolean",)))
    def test_canonical_across_orders(self, tree):
        for label in tree.classes:
            raw = class_terms(tree, label)
            self.assertEqual(bcf(raw, FIFO).terms, bcf(raw, LIFO).terms)

    @settings(max_examples=60, deadline=None)
    @given(tree=trees(schemas=("boolean",)))
    def test_terms_are_the_enumerated_primes(self, tree):
        schema = tree.schema
        for label in tree.classes:
            dnf = bcf(class_terms(tree, label))
            as_assignments = {PartialAssignment.from_mapping(schema, dict(t.literals())) for t in dnf.terms}
            self.assertEqual(as_assignments, set(brute_all_axps(tree, label)))
            for point in EnumerableSpace(schema):
                self.assertEqual(dnf.evaluate(point_to_minterm(point)), tree.predict(point) == label)

    def test_bcf_identifies_the_function(self):
        for seed in range(60):
            schema = boolean_schema(2 + seed % 7)
            tree = random_tree(schema, 2 + seed % 4, seed)
            variant = equivalent_variant(tree, seed, steps=4)
            twin = mutate_leaf(tree)
            forms = {label: bcf(class_terms(tree, label)).terms for label in tree.classes}
            for label in tree.classes:
                self.assertEqual(bcf(class_terms(variant, label)).terms, forms[label], f"seed={seed}")
            self.assertTrue(any(bcf(class_terms(twin, label)).terms != forms[label] for label in tree.classes),
                            f"seed={seed}")


class TestCover(unittest.TestCase):
    def setUp(self):
        self.fa, self.fb = example_function_trees()
        self.primes = bcf(class_terms(self.fa, "1"))

    def test_example_function(self):
        self.assertEqual(len(self.primes), 8)
        for m in range(16):
            self.assertEqual(self.primes.evaluate(m), m in EXAMPLE_FUNCTION_MINTERMS)

    def test_two_minimum_covers(self):
        covers = all_minimum_covers(self.primes)
        self.assertEqual(len(covers), 2)
        self.assertEqual(count_minimum_covers(self.primes), 2)
        for cover in covers:
            self.assertEqual(cover.cost, (4, 12))
            for m in range(16):
                self.assertEqual(cover.evaluate(m), m in EXAMPLE_FUNCTION_MINTERMS)

    def test_tie_breaks_pick_different_covers(self):
        low = minimize(self.primes, LEX_LOW)
        high = minimize(self.primes, LEX_HIGH)
        self.assertEqual(low.kind, DnfKind.MINIMIZED)
        self.assertIn(term(x1=1, x2=1, x3=1), low.terms)
        self.assertIn(term(x2=0, x3=0, x4=0), high.terms)
        self.assertNotEqual(low.terms, high.terms)
        self.assertEqual(set(low.terms) | set(high.terms), set(self.primes.terms))

    def test_seeded_tie_break_is_deterministic(self):
        tb = TieBreak.parse("seeded:7")
        self.assertEqual(minimize(self.primes, tb).terms, minimize(self.primes, tb).terms)
        self.assertEqual(str(tb), "seeded:7")
        with self.assertRaises(ValueError):
            TieBreak.parse("random")

    def test_cost_models_agree_here(self):
        low = minimize(self.primes, LEX_LOW, CostModel.LITERALS_THEN_TERMS)
        self.assertEqual(low.cost, (4, 12))

    def test_essential_primes(self):
        t1 = running_examples()[0]
        result = minimize(bcf(class_terms(t1, "1")))
        self.assertEqual(format_dnf(result), "x1\nx2")

    def test_empty_class(self):
        schema = boolean_schema(2)
        tree = random_tree(schema, 1, seed=0, classes=("0", "1", "2"))
        missing = next(c for c in tree.classes if not tree.paths_with_label(c))
        result = minimize(bcf(class_terms(tree, missing)))
        self.assertEqual(format_dnf(result), "0")

    def test_feature_cap(self):
        with self.assertRaises(CapExceededError):
            minimize(self.primes, feature_cap=3)


class TestComparisons(unittest.TestCase):
    def test_minimized_comparison_is_unsound(self):
        fa, fb = example_function_trees()
        self.assertTrue(qm_equivalence(fa, fb, LEX_LOW, LEX_LOW))
        self.assertFalse(qm_equivalence(fa, fb, LEX_LOW, LEX_HIGH))
        self.assertTrue(bcf_equivalence(fa, fb))

    def test_bcf_comparison(self):
        t1, t2, t3 = running_examples()
        self.assertTrue(bcf_equivalence(t1, t2))
        self.assertFalse(bcf_equivalence(t1, t3))


if __name__ == '__main__':
    unittest.main()
