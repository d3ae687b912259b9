import json
import os
import random
import tempfile
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from opcyl.catalog.ainf import AInfinityPresentation
from opcyl.catalog.registry import build
from opcyl.core.errors import ArityError, PresentationError
from opcyl.core.semantic.evaluator import parse_element
from opcyl.core.terms.element import Element
from opcyl.export.formats import JsonExporter, LatexExporter
from opcyl.export.formats.json_format import element_from_dict, label_key
from opcyl.export.formats.latex_format import MAX_TREE_VERTICES, latex_monomial, latex_name
from opcyl.verification.enumerate import cylinder_alphabet, random_element


class TestJsonExport(unittest.TestCase):
    """Test element JSON"""

    def setUp(self):
        self.exporter = JsonExporter()
        self.cylinder = build("cyl:ainf")
        self.element = parse_element(self.cylinder, "2*sigma:mu_2(i1:mu_2, id) - i0:mu_3")

    def test_layout(self):
        """Test the document layout of an exported element"""
        data = json.loads(self.exporter.render(self.element))
        self.assertEqual((data["arity"], data["degree"]), (3, 1))
        self.assertEqual(data["terms"][0], {
            "coeff": "-1",
            "tree": {"label": "i0:mu_3/3", "children": [{"leaf": 1}, {"leaf": 2}, {"leaf": 3}]},
        })
        tree = data["terms"][1]["tree"]
        self.assertEqual(data["terms"][1]["coeff"], "2")
        self.assertEqual(tree["label"], "sigma:mu_2/2")
        self.assertEqual(tree["children"][0]["label"], "i1:mu_2/2")
        self.assertEqual(tree["children"][1], {"leaf": 3})
        self.assertEqual(label_key(AInfinityPresentation().mu(2)), "plain:mu_2/2")

    def test_round_trip(self):
        """Test that loading an export gives the element and the same text back"""
        text = self.exporter.render(self.element)
        loaded = self.exporter.load(text, self.cylinder)
        self.assertEqual(loaded, self.element)
        self.assertEqual(self.exporter.render(loaded), text)

    def test_zero_and_identity(self):
        """Test the zero element and the identity"""
        zero = self.exporter.load(self.exporter.render(Element.zero(2, 0)), self.cylinder)
        self.assertTrue(zero.is_zero())
        self.assertEqual((zero.arity, zero.degree), (2, 0))
        identity = self.exporter.load(self.exporter.render(Element.identity()), self.cylinder)
        self.assertEqual(identity, Element.identity())

    def test_bad_documents(self):
        """Test labels that do not resolve"""
        def document(label: str, children: int) -> dict:
            leaves = [{"leaf": k} for k in range(1, children + 1)]
            return {"arity": children, "degree": 0, "terms": [{"coeff": "1", "tree": {"label": label, "children": leaves}}]}

        with self.assertRaises(PresentationError):
            element_from_dict(document("mu_2", 2), self.cylinder)
        with self.assertRaises(PresentationError):
            element_from_dict(document("blue:mu_2/2", 2), self.cylinder)
        with self.assertRaises(ArityError):
            element_from_dict(document("i0:mu_2/3", 3), self.cylinder)
        with self.assertRaises(ArityError):
            element_from_dict(document("i0:mu_2/2", 3), self.cylinder)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=4))
    def test_random_round_trip(self, seed, arity):
        """Test export then import on computed elements"""
        rng = random.Random(seed)
        e = random_element(rng, cylinder_alphabet(self.cylinder.source, 4), 3, arity)
        h = self.cylinder.homotopy(e)
        for value in (e, h):
            self.assertEqual(self.exporter.load(self.exporter.render(value), self.cylinder), value)

    def test_export_all(self):
        """Test writing one file per element"""
        with tempfile.TemporaryDirectory() as tmp:
            paths = self.exporter.export_all({"x": self.element, "zero": Element.zero()}, os.path.join(tmp, "out"))
            self.assertEqual(set(paths), {"x", "zero"})
            self.assertTrue(paths["x"].endswith("x.json"))
            with open(paths["x"]) as f:
                self.assertEqual(f.read(), self.exporter.render(self.element))


class TestLatexExport(unittest.TestCase):
    """Test the LaTeX exporter"""

    def setUp(self):
        self.exporter = LatexExporter()
        self.ainf = AInfinityPresentation()

    def test_names(self):
        """Test LaTeX for label texts"""
        self.assertEqual(latex_name("mu_2"), r"\mu_{2}")
        self.assertEqual(latex_name("sigma:mu_2"), r"\sigma(\mu_{2})")
        self.assertEqual(latex_name("i0:sigma:D_3"), r"i_0(\sigma(D_{3}))")
        self.assertEqual(latex_name("nu_3^{1,2}"), r"\nu_{3}^{\{1,2\}}")
        self.assertEqual(latex_name("lambda-ainf"), r"\Lambda \mathrm{ainf}")

    def test_expression(self):
        """Test the nested expression form"""
        mono = parse_element(self.ainf, "mu_3 o2 mu_2").monomials()[0]
        self.assertEqual(latex_monomial(mono), r"\mu_{3}\left(\mathrm{id}, \mu_{2}, \mathrm{id}\right)")

    def test_small_monomials_are_trees(self):
        """Test that small monomials are drawn with TikZ"""
        e = parse_element(self.ainf, "mu_3 o2 mu_2 - mu_2 o1 mu_3")
        text = self.exporter.render(e, name="x")
        self.assertIn(r"\begin{tikzpicture}", text)
        self.assertIn(r"\node (root) {$\mu_{3}$}", text)
        self.assertIn("child {coordinate}", text)
        self.assertIn("x =", text)
        self.assertNotIn(r"\documentclass", text)

        plain = self.exporter.render(e, name="x", trees=False)
        self.assertNotIn("tikzpicture", plain)
        self.assertIn(r"\mu_{3}\left(\mathrm{id}, \mu_{2}, \mathrm{id}\right)", plain)

    def test_large_monomials_are_expressions(self):
        """Test that monomials above the vertex bound are printed inline"""
        comb = "mu_2"
        for _ in range(MAX_TREE_VERTICES):
            comb = f"mu_2 o1 ({comb})"
        large = parse_element(self.ainf, comb)
        self.assertEqual(large.monomials()[0].vertex_count, MAX_TREE_VERTICES + 1)
        text = self.exporter.render(large)
        self.assertNotIn("tikzpicture", text)
        self.assertIn(r"\left(", text)

    def test_standalone_and_zero(self):
        """Test the standalone document and the zero element"""
        text = self.exporter.render(Element.zero(2, 0), name="d(mu_2)", standalone=True)
        self.assertIn(r"\documentclass{article}", text)
        self.assertIn(r"\end{document}", text)
        self.assertIn("% arity 2, degree 0", text)
        lines = [line.strip() for line in text.splitlines()]
        self.assertIn("0", lines)


if __name__ == "__main__":
    unittest.main()
