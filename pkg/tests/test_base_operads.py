import random
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from opcyl.core.base.operads import ASSOCIATIVE, INITIAL, UNITAL_ASSOCIATIVE, BaseKind, BaseOperad
from opcyl.core.base.registry import default_registry
from opcyl.core.errors import ArityError, OperadError, PresentationError
from opcyl.core.terms.composition import compose_at
from opcyl.core.terms.element import Element
from opcyl.core.terms.generators import generator
from opcyl.verification.enumerate import random_monomial


class TestBaseOperads(unittest.TestCase):
    """Test the base operads and their normal form"""

    def setUp(self):
        self.mu2 = Element.generator(ASSOCIATIVE.label(2))
        self.lambda_assoc = ASSOCIATIVE.suspended()

    def test_bases(self):
        """Test the basis of each kind"""
        self.assertEqual(INITIAL.labels(4), [])
        self.assertEqual([g.name for g in ASSOCIATIVE.labels(3)], ["mu_2", "mu_3"])
        self.assertEqual([g.name for g in UNITAL_ASSOCIATIVE.labels(2)], ["u", "mu_2"])
        self.assertIsNone(ASSOCIATIVE.resolve("u"))
        self.assertIsNone(ASSOCIATIVE.resolve("mu_1"))
        self.assertEqual(UNITAL_ASSOCIATIVE.resolve("u").arity, 0)
        self.assertIsNone(INITIAL.resolve("mu_2"))
        with self.assertRaises(ArityError):
            INITIAL.label(2)

    def test_assoc_contracts(self):
        """Test that base-labeled edges merge into one corolla"""
        result = compose_at(self.mu2, 1, self.mu2, ASSOCIATIVE)
        self.assertEqual(result, Element.generator(ASSOCIATIVE.label(3)))

    def test_unit_contracts_to_identity(self):
        """Test mu_2 o_i u = id in the unital base"""
        mu2 = Element.generator(UNITAL_ASSOCIATIVE.label(2))
        unit = Element.generator(UNITAL_ASSOCIATIVE.resolve("u"))
        for i in (1, 2):
            self.assertEqual(compose_at(mu2, i, unit, UNITAL_ASSOCIATIVE), Element.identity())

    def test_suspended_base(self):
        """Test degrees and composition signs of the suspended base"""
        base = self.lambda_assoc
        self.assertEqual(base.name, "lambda-assoc")
        self.assertEqual(base.label(3).degree, -2)
        mu2 = Element.generator(base.label(2))
        mu3 = Element.generator(base.label(3))
        self.assertEqual(compose_at(mu2, 1, mu2, base), -mu3)
        self.assertEqual(compose_at(mu2, 2, mu2, base), mu3)
        with self.assertRaises(OperadError):
            base.suspended()

    def test_cells_stay_apart(self):
        """Test that cell labels never merge with base labels"""
        x = Element.generator(generator("x", 2, 0))
        result = compose_at(self.mu2, 1, x, ASSOCIATIVE)
        self.assertEqual(len(result), 1)
        self.assertEqual(result.monomials()[0].vertex_count, 2)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.sampled_from([0, 1]))
    def test_normal_form_is_confluent(self, seed, shift):
        """Test that random merge orders reach the same signed normal form"""
        rng = random.Random(seed)
        base = BaseOperad(BaseKind.ASSOC, shift)
        labels = base.labels(3) + [generator("x", 2, 1), generator("y", 1, 0)]
        mono = random_monomial(rng, labels, 4)
        expected = base.contract(mono)
        for _ in range(3):
            self.assertEqual(base.contract(mono, random.Random(rng.random())), expected)

    def test_registry(self):
        """Test the base registry"""
        self.assertTrue(default_registry.exists("uassoc"))
        self.assertIs(default_registry.require("assoc"), ASSOCIATIVE)
        with self.assertRaises(PresentationError):
            default_registry.require("lie")
        with self.assertRaises(ValueError):
            default_registry.register(INITIAL)


if __name__ == "__main__":
    unittest.main()
