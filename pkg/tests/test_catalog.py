import unittest

import pytest

from opcyl.catalog.ainf import AInfinityPresentation
from opcyl.catalog.formulas import (
    ainf_morphism_components,
    chain_element,
    chain_homotopy_prediction,
    compositions,
    dsigma_ainf,
    first_series_prediction,
    h_i1_d,
)
from opcyl.catalog.registry import build, default_catalog
from opcyl.catalog.unital import UnitalPresentation, unital_retraction, unital_retraction_homotopy
from opcyl.core.errors import ArityError, OperadError, PresentationError, UnknownGeneratorError
from opcyl.core.semantic.evaluator import parse_element
from opcyl.core.terms.element import Element
from opcyl.core.terms.generators import Marker, marked
from opcyl.cylinder.presentation import CylinderPresentation
from opcyl.presentation.explicit import ExplicitPresentation
from opcyl.suspension.operadic import desuspend_element


class TestCatalog(unittest.TestCase):
    """Test the named presentations"""

    def test_names(self):
        """Test the registry of built-in names"""
        for name in ("ainf", "lambda-ainf", "ainf-d", "lambda-ainf-d", "assoc-der", "unital-nu:m=3"):
            self.assertTrue(default_catalog.exists(name), name)
        self.assertFalse(default_catalog.exists("lie"))
        self.assertEqual(build("cyl:cyl:ainf").name, "cyl:cyl:ainf")
        self.assertEqual(build("dcyl:assoc-der").name, "dcyl:assoc-der")
        self.assertEqual(build("assoc-der", suspended=True).name, "lambda-assoc-der")
        self.assertIn("cyl:<name>", [name for name, _ in default_catalog.describe()])

    def test_unknown_names(self):
        """Test that unknown names raise with the known ones listed"""
        with self.assertRaises(PresentationError) as ctx:
            build("lie")
        self.assertIn("ainf", str(ctx.exception))
        with self.assertRaises(PresentationError):
            build("cyl:nothing")
        with self.assertRaises(PresentationError):
            build("unital-nu:m=0")
        with self.assertRaises(ValueError):
            default_catalog.register("ainf", AInfinityPresentation)

    def test_assoc_der_is_strictly_linear(self):
        """Test that the derivation quotient has only one-cell boundaries"""
        self.assertTrue(build("assoc-der").is_strictly_linear(5))


class TestUnital(unittest.TestCase):
    """Test strict units up to homotopy"""

    def test_generators(self):
        """Test the cells nu_n^S and their gradings"""
        unital = UnitalPresentation(1)
        g = unital.resolve("nu_2^{1}")
        self.assertEqual((g.arity, g.degree, g.stage), (1, 1, 1))
        self.assertTrue(unital.boundary(unital.resolve("nu_1^{1}")).is_zero())
        self.assertEqual(unital.boundary(g), parse_element(unital, "mu_2 o1 nu_1^{1} - id"))
        with self.assertRaises(UnknownGeneratorError):
            unital.resolve("nu_2^{3}")
        self.assertEqual(len(UnitalPresentation(2).generators(1)), 1 + 3)

    def test_d_squared(self):
        """Test d^2 = 0 for m = 1 and m = 2"""
        for m in (1, 2):
            report = UnitalPresentation(m).check_d_squared(4)
            self.assertTrue(report.success, f"m = {m}: {report.message} {report.residue}")

    def test_retraction_and_homotopy(self):
        """Test that r and H are chain maps and H is 1 on i0"""
        for m in (1, 2):
            source = UnitalPresentation(m)
            cylinder = CylinderPresentation(source)
            homotopy = unital_retraction_homotopy(cylinder)
            for op in (unital_retraction(source), homotopy):
                report = op.check_chain_map(3)
                self.assertTrue(report.success, f"m = {m}, {op.name} on {report.failing_generator}")
            for x in source.generators(3):
                self.assertEqual(homotopy(Element.generator(marked(x, Marker.I0))), Element.generator(x))

    def test_homotopy_values(self):
        """Test H on the ends and on sigma"""
        source = UnitalPresentation(2)
        cylinder = CylinderPresentation(source)
        homotopy = unital_retraction_homotopy(cylinder)
        self.assertTrue(homotopy(parse_element(cylinder, "i1:nu_3^{1,2}")).is_zero())
        self.assertEqual(homotopy(parse_element(cylinder, "sigma:nu_2^{1,2}")),
                         parse_element(source, "nu_3^{2,3} o1 u"))
        m1 = UnitalPresentation(1)
        r = unital_retraction(m1)
        self.assertEqual(r(parse_element(m1, "nu_1^{1}")), parse_element(m1, "u"))

    def test_homotopy_needs_unital_source(self):
        """Test that H refuses other cylinders"""
        with self.assertRaises(PresentationError):
            unital_retraction_homotopy(build("cyl:ainf"))


class TestClosedFormulas(unittest.TestCase):
    """Test the closed A-infinity cylinder formulas against the engine"""

    def setUp(self):
        self.cylinder = build("cyl:ainf")
        self.lambda_cylinder = build("cyl:lambda-ainf")

    def test_compositions(self):
        """Test the ordered compositions helper"""
        self.assertEqual(list(compositions(5, 2)), [(2, 3), (3, 2)])
        self.assertEqual(list(compositions(0, 0)), [()])
        self.assertEqual(list(compositions(3, 2)), [])

    def test_dsigma_small(self):
        """Test the closed formula at n = 2 and its arity check"""
        self.assertEqual(dsigma_ainf(2), parse_element(self.cylinder, "i0:mu_2 - i1:mu_2"))
        with self.assertRaises(ArityError):
            dsigma_ainf(1)

    def test_dsigma_matches_engine(self):
        """Test d(sigma mu_n) from the engine against the closed formula, in both gradings"""
        for n in range(2, 5):
            formula = dsigma_ainf(n)
            engine = self.cylinder.cylinder_differential(self.cylinder.resolve(f"sigma:mu_{n}"))
            self.assertEqual(engine, formula, f"n = {n}")
            braced = self.lambda_cylinder.cylinder_differential(self.lambda_cylinder.resolve(f"sigma:mu_{n}"))
            self.assertEqual(desuspend_element(braced), formula, f"n = {n}, suspended")

    def test_h_i1_d(self):
        """Test the brace-form homotopy formulas"""
        expected = parse_element(self.lambda_cylinder, "sigma:mu_2{i1:mu_2} - i0:mu_2{sigma:mu_2}")
        self.assertEqual(h_i1_d("lambda-ainf", 2), expected)
        self.assertTrue(h_i1_d("lambda-ainf-d", 1).is_zero())
        with self.assertRaises(OperadError):
            h_i1_d("ainf", 2)

        source = AInfinityPresentation(suspended=True)
        for n in range(2, 4):
            engine = self.lambda_cylinder.homotopy(self.lambda_cylinder.i1_map(source.boundary(source.mu(n + 1))))
            self.assertEqual(engine, h_i1_d("lambda-ainf", n), f"n = {n}")

        with_derivation = AInfinityPresentation(suspended=True, with_derivation=True)
        cylinder = CylinderPresentation(with_derivation)
        for n in range(1, 4):
            engine = cylinder.homotopy(cylinder.i1_map(with_derivation.boundary(with_derivation.derivation(n))))
            self.assertEqual(engine, h_i1_d("lambda-ainf-d", n), f"n = {n}")

    def test_first_series(self):
        """Test the first-series case split on a few monomials"""
        cylinder = self.lambda_cylinder
        for text in ("i0:mu_2(i1:mu_2, id)", "i0:mu_3(sigma:mu_4, i1:mu_2, id)", "i0:mu_2(sigma:mu_2, i1:mu_3)"):
            mono = parse_element(cylinder, text).monomials()[0]
            self.assertEqual(cylinder.homotopy(Element.of(mono)), first_series_prediction(mono), text)
        with self.assertRaises(OperadError):
            first_series_prediction(parse_element(cylinder, "sigma:mu_2").monomials()[0])

    def test_chain_formula(self):
        """Test h i1 on a chain of arity-one cells"""
        source = ExplicitPresentation("chain")
        a = source.add_generator("a", 1, 0, 0)
        b = source.add_generator("b", 1, 1, 1, "a o1 a")
        cylinder = CylinderPresentation(source)
        for chain in ((a, a), (b, a), (a, b, a)):
            engine = cylinder.homotopy(chain_element([marked(x, Marker.I1) for x in chain]))
            self.assertEqual(engine, chain_homotopy_prediction(chain), [x.label for x in chain])
        with self.assertRaises(OperadError):
            chain_homotopy_prediction([])

    def test_morphism_components(self):
        """Test reading off (m', m, f) from the projection of the cylinder"""
        cylinder = self.cylinder
        projection = cylinder.structure_maps()[2]
        m_prime, m, f = ainf_morphism_components(projection, 3)
        mu3 = Element.generator(cylinder.source.mu(3))
        self.assertEqual(m_prime, mu3)
        self.assertEqual(m, mu3)
        self.assertTrue(f.is_zero())

    @pytest.mark.slow
    def test_dsigma_large(self):
        """Test the closed formula up to n = 6"""
        for n in range(5, 7):
            engine = self.cylinder.cylinder_differential(self.cylinder.resolve(f"sigma:mu_{n}"))
            self.assertEqual(engine, dsigma_ainf(n), f"n = {n}")


if __name__ == "__main__":
    unittest.main()
