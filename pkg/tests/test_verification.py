import random
import unittest
from pathlib import Path
from unittest.mock import patch

import pytest

from opcyl.catalog.ainf import AInfinityPresentation
from opcyl.catalog.formulas import first_series_prediction
from opcyl.config import EngineSettings
from opcyl.core.errors import NotLinearError
from opcyl.core.terms.element import Element
from opcyl.core.terms.generators import Marker, generator
from opcyl.core.terms.render import render_monomial
from opcyl.cylinder.presentation import CylinderPresentation
from opcyl.verification.base import VerificationOptions
from opcyl.verification.engine import VerificationEngine
from opcyl.verification.enumerate import (
    chains,
    cylinder_alphabet,
    monomials,
    random_chain_presentation,
    random_element,
    standard_monomials,
)
from opcyl.verification.suites import SUITE_NAMES, brace_relation_rhs, default_suites, first_series_monomials

FIXTURES = Path(__file__).parent / "fixtures"


class TestEnumeration(unittest.TestCase):
    """Test the monomial bases used by the suites"""

    def setUp(self):
        self.ainf = AInfinityPresentation()

    def test_monomial_counts(self):
        """Test the number of trees on the mu_2 alphabet"""
        labels = [self.ainf.mu(2)]
        # Catalan numbers: binary trees with 1, 2 and 3 vertices
        self.assertEqual(len(monomials(labels, 1, 10)), 1)
        self.assertEqual(len(monomials(labels, 2, 10)), 1 + 2)
        self.assertEqual(len(monomials(labels, 3, 10)), 1 + 2 + 5)
        self.assertEqual(len(monomials(labels, 3, 3)), 1 + 2)
        self.assertEqual(len(monomials(labels, 0, 3, min_vertices=0)), 1)

    def test_standard_monomials(self):
        """Test that the standard basis uses only cylinder labels"""
        basis = standard_monomials(self.ainf, 3, 1)
        self.assertEqual(len(basis), len(cylinder_alphabet(self.ainf, 3)))
        self.assertEqual(len(basis), 6)

    def test_random_element(self):
        """Test that random elements are homogeneous"""
        rng = random.Random(7)
        e = random_element(rng, self.ainf.generators(3), 3, 3)
        if not e.is_zero():
            self.assertEqual(e.arity, 3)
            self.assertEqual(len({m.degree for m in e.monomials()}), 1)

    def test_random_chain_presentation(self):
        """Test that the random presentations live in arities 0 and 1 and have d^2 = 0"""
        nullary_cells = 0
        for seed in range(20):
            source = random_chain_presentation(random.Random(seed))
            generators = source.generators(1)
            self.assertEqual(len(generators), 4)
            self.assertEqual(source.generators(5), generators)
            self.assertIn(0, {g.arity for g in generators})
            nullary_cells += sum(1 for g in generators if g.arity == 0 and g.stage > 0)
            self.assertTrue(source.check_d_squared(1).success, f"seed {seed}")
        self.assertGreater(nullary_cells, 0)

    def test_chains_end_in_arity_zero(self):
        """Test that an arity-0 label only ends a chain"""
        a = generator("chain_a", 1, 0)
        b = generator("chain_b", 1, 1)
        p = generator("chain_p", 0, 0)
        found = list(chains([a, b, p], 2))
        # 2 + 1 of length one, 4 + 2 of length two
        self.assertEqual(len(found), 9)
        self.assertIn((a, p), found)
        self.assertNotIn((p, a), found)
        for chain in found:
            self.assertTrue(all(x.arity == 1 for x in chain[:-1]))

    def test_first_series_monomials(self):
        """Test that every first-series monomial has exactly one i1 argument"""
        found = list(first_series_monomials(4, 3))
        self.assertGreater(len(found), 0)
        for mono in found:
            self.assertEqual(sum(1 for tok in mono.generators if tok.marker is Marker.I1), 1)

    def test_brace_relation_with_no_arguments(self):
        """Test that the brace relation reduces to x{z} when there is nothing to insert"""
        x = Element.generator(self.ainf.mu(2))
        z = Element.generator(self.ainf.mu(3))
        self.assertEqual(brace_relation_rhs(x, [], [z]).arity, 4)


class TestVerificationEngine(unittest.TestCase):
    """Test running the verification suites with small bounds"""

    def setUp(self):
        self.engine = VerificationEngine(default_suites(), EngineSettings())
        self.options = VerificationOptions(max_arity=3, max_vertices=2, seed=1, samples=20)

    def test_suite_names(self):
        """Test the names the CLI accepts"""
        for name in ("sdr", "d2", "vanishing", "ainf-formula", "tech", "conder", "linear", "unital-H",
                     "braces", "suspension", "chain"):
            self.assertIn(name, SUITE_NAMES)

    def test_unknown_suite(self):
        """Test that unknown suite names are reported"""
        result = self.engine.verify(["nope"], self.options)
        self.assertFalse(result.success)
        self.assertEqual(result.errors, ["Unknown suite: nope"])

    def test_small_suites(self):
        """Test every suite at small bounds"""
        for name in SUITE_NAMES:
            result = self.engine.verify([name], self.options)
            self.assertEqual(result.errors, [], name)
            report = result.reports[0]
            self.assertTrue(report.success, f"{name}: {report.message}\n{report.counterexample}")
            self.assertGreater(report.checked, 0, name)

    def test_stats(self):
        """Test the timing statistics of a run"""
        result = self.engine.verify(["d2", "sdr"], self.options)
        self.assertTrue(result.success)
        self.assertEqual(set(result.stats["suites"]), {"d2", "sdr"})
        self.assertEqual(result.stats["total_checked"], sum(r.checked for r in result.reports))
        for report in result.reports:
            self.assertGreaterEqual(report.time_ms, 0.0)
            self.assertEqual(result.stats["suites"][report.suite]["time_ms"], report.time_ms)
        self.assertAlmostEqual(result.stats["verification_time_ms"], sum(r.time_ms for r in result.reports))

    def test_timed_run_stamps_the_report(self):
        """Test that a timed run returns the suite's report with its time filled in"""
        suite = default_suites()["d2"]
        with patch("opcyl.verification.base.time") as clock:
            clock.perf_counter.side_effect = [10.0, 10.25]
            report = suite.timed_run(self.options, EngineSettings())
        self.assertTrue(report.success)
        self.assertEqual(report.suite, "d2")
        self.assertAlmostEqual(report.time_ms, 250.0)

    def test_failure_reports_counterexample(self):
        """Test that a failing d^2 check stops the run with its counterexample"""
        options = self.options.model_copy(update={"presentation": str(FIXTURES / "bad_d2.yaml")})
        result = self.engine.verify(["d2", "sdr"], options)
        self.assertFalse(result.success)
        self.assertEqual(len(result.reports), 1)
        self.assertIn("c", result.reports[0].counterexample)

    def test_linear_refusal(self):
        """Test that the linear suite refuses A-infinity"""
        options = self.options.model_copy(update={"presentation": "ainf"})
        with self.assertRaises(NotLinearError):
            self.engine.verify(["linear"], options)

    def test_suspended_option(self):
        """Test suites on the suspended presentations"""
        options = self.options.model_copy(update={"suspended": True})
        result = self.engine.verify(["sdr", "d2"], options)
        self.assertTrue(result.success, [r.counterexample for r in result.reports])

    def _assert_suites_pass(self, names, **bounds):
        options = VerificationOptions(**{"seed": 0, **bounds})
        result = self.engine.verify(names, options)
        self.assertEqual(result.errors, [])
        self.assertTrue(result.success, [(r.suite, r.message, r.counterexample) for r in result.reports])
        return result

    @pytest.mark.slow
    def test_d_squared_at_arity_seven(self):
        """Test d^2 = 0 on every built-in presentation up to arity 7"""
        for name in ("ainf", "lambda-ainf", "ainf-d", "assoc-der", "unital-nu:m=1", "unital-nu:m=2"):
            with self.subTest(presentation=name):
                self._assert_suites_pass(["d2"], presentation=name, max_arity=7)

    @pytest.mark.slow
    def test_cylinder_d_squared_at_arity_seven(self):
        """Test d^2(sigma mu_n) = 0 up to n = 7 in both gradings"""
        for name in ("cyl:ainf", "cyl:lambda-ainf"):
            with self.subTest(presentation=name):
                self._assert_suites_pass(["d2"], presentation=name, max_arity=7)

    @pytest.mark.slow
    def test_sdr_at_acceptance_bounds(self):
        """Test the SDR identities on the standard basis with arity <= 5 and <= 3 vertices"""
        self._assert_suites_pass(["sdr"], max_arity=5, max_vertices=3)

    @pytest.mark.slow
    def test_closed_formulas_at_acceptance_bounds(self):
        """Test d(sigma mu_n) for n <= 6, h i1 d(mu_(n+1)) for n <= 5 and h i1 d(D_n) for n <= 5"""
        result = self._assert_suites_pass(["ainf-formula"], max_arity=6)
        self.assertEqual(result.reports[0].checked, 5)
        self._assert_suites_pass(["tech"], max_arity=6, max_vertices=4)
        self._assert_suites_pass(["conder"], max_arity=5)

    @pytest.mark.slow
    def test_first_series_at_arity_eight(self):
        """Test the first-series case split with total arity <= 8 and <= 4 vertices"""
        cylinder = CylinderPresentation(AInfinityPresentation(suspended=True))
        checked = 0
        for mono in first_series_monomials(8, 4):
            checked += 1
            self.assertEqual(cylinder.homotopy(Element.of(mono)), first_series_prediction(mono),
                             render_monomial(mono))
        self.assertGreater(checked, 0)

    @pytest.mark.slow
    def test_vanishing_at_acceptance_bounds(self):
        """Test h = 0 on 1000 sampled monomials with arity <= 6 and <= 4 vertices"""
        result = self._assert_suites_pass(["vanishing"], max_arity=6, max_vertices=4, samples=1000)
        self.assertEqual(result.reports[0].checked, 1000)

    @pytest.mark.slow
    def test_linear_at_arity_six(self):
        """Test the linear fast path, nu and iota up to arity 6"""
        self._assert_suites_pass(["linear"], presentation="assoc-der", max_arity=6)

    @pytest.mark.slow
    def test_unital_homotopy_at_acceptance_bounds(self):
        """Test H on the unital example for n <= m + 3"""
        for m in (1, 2):
            with self.subTest(m=m):
                self._assert_suites_pass(["unital-H"], presentation=f"unital-nu:m={m}", max_arity=m + 3)

    @pytest.mark.slow
    def test_algebra_laws_at_acceptance_bounds(self):
        """Test 10000 random instances of the operad laws, the brace relation and Lambda d = d Lambda"""
        result = self._assert_suites_pass(["braces", "suspension"], max_arity=4, max_vertices=3, samples=10000)
        self.assertGreaterEqual(result.stats["total_checked"], 20000)

    @pytest.mark.slow
    def test_chains_at_acceptance_bounds(self):
        """Test the arity 0 and 1 chain formula on chains of length <= 5"""
        for seed in range(5):
            with self.subTest(seed=seed):
                self._assert_suites_pass(["chain"], seed=seed, max_vertices=5)


if __name__ == "__main__":
    unittest.main()
