import random
import unittest
from pathlib import Path

from antlr4 import CommonTokenStream, InputStream, ParserRuleContext
from antlr4.error.ErrorListener import ErrorListener
from antlr4.error.Errors import ParseCancellationException
from antlr4.tree.Tree import ParseTreeVisitor
from hypothesis import given, settings
from hypothesis import strategies as st

from opcyl.catalog.ainf import AInfinityPresentation
from opcyl.catalog.registry import build
from opcyl.catalog.unital import UnitalPresentation
from opcyl.core.ast.nodes import IdentityNode, LabelNode, NodeType, TermNode
from opcyl.core.errors import ExpressionError
from opcyl.core.parser import Parser
from opcyl.core.parser.builder import ASTBuilder
from opcyl.core.parser.error_listener import ExpressionErrorListener
from opcyl.core.parser.grammar.ExpressionLexer import ExpressionLexer
from opcyl.core.parser.grammar.ExpressionParser import ExpressionParser
from opcyl.core.parser.grammar.ExpressionVisitor import ExpressionVisitor
from opcyl.core.semantic.evaluator import Evaluator, SemanticError, parse_element
from opcyl.core.terms.composition import brace, compose_at, compose_full
from opcyl.core.terms.element import Element
from opcyl.core.terms.render import render_element
from opcyl.verification.enumerate import cylinder_alphabet, random_element


class TestParser(unittest.TestCase):
    """Test the expression parser"""

    def setUp(self):
        self.parser = Parser()

    def test_parse_composition(self):
        """Test parsing an infix partial composition"""
        result = self.parser.parse_string("mu_2 o1 mu_2")
        self.assertTrue(result.success, f"Parsing failed with errors: {result.errors}")
        self.assertEqual(result.ast.node_type, NodeType.COMPOSE)
        self.assertEqual(result.ast.slot, 1)

    def test_parse_sum(self):
        """Test parsing signed terms with scalars"""
        result = self.parser.parse_string("2*mu_3 - i0:mu_2(sigma:mu_2, id) + 3 mu_2")
        self.assertTrue(result.success, f"Parsing failed with errors: {result.errors}")
        self.assertEqual(result.ast.node_type, NodeType.SUM)
        self.assertEqual([term.coeff for term in result.ast.terms], [2, -1, 3])

    def test_parse_brace_and_labels(self):
        """Test braces and the label forms"""
        result = self.parser.parse_string("nu_3^{1, 2}{mu_2} + sigma:i0:x")
        self.assertTrue(result.success, f"Parsing failed with errors: {result.errors}")
        brace_node = result.ast.terms[0].body
        self.assertEqual(brace_node.node_type, NodeType.BRACE)
        self.assertEqual(brace_node.head.text, "nu_3^{1,2}")
        self.assertEqual(result.ast.terms[1].body.text, "sigma:i0:x")

    def test_syntax_errors(self):
        """Test that syntax errors carry positions"""
        result = self.parser.parse_string("mu_2 o1 ")
        self.assertFalse(result.success)
        self.assertIsNone(result.ast)
        self.assertEqual(result.errors[0].line, 1)

        result = self.parser.parse_string("mu_2 $ mu_3")
        self.assertFalse(result.success)
        self.assertEqual(result.errors[0].column, 6)

        self.assertFalse(self.parser.parse_string("mu_2(mu_2, id").success)

    def test_scalar_without_composite(self):
        """Test that a bare nonzero integer is rejected"""
        result = self.parser.parse_string("mu_2 + 3")
        self.assertFalse(result.success)
        self.assertEqual(result.errors[0].message, "Scalar 3 must multiply a composite")
        self.assertEqual(result.errors[0].column, 8)

    def test_recognition_error_message(self):
        """Test the lexer's message for a character outside the grammar"""
        result = self.parser.parse_string("mu_2 $ mu_3")
        self.assertEqual(result.errors[0].message, "token recognition error at: '$'")

    def test_multiline_positions(self):
        """Test that positions count lines and 1-based columns"""
        result = self.parser.parse_string("mu_2\n  - mu_3 o")
        self.assertFalse(result.success)
        self.assertEqual((result.errors[0].line, result.errors[0].column), (2, 10))

        result = self.parser.parse_string("mu_2\n  - mu_3")
        self.assertTrue(result.success, f"Parsing failed with errors: {result.errors}")
        second = result.ast.terms[1]
        self.assertEqual((second.line, second.column), (2, 3))
        self.assertEqual((second.body.line, second.body.column), (2, 5))

    def test_parse_file(self):
        """Test parsing an expression stored in a file"""
        path = Path(__file__).parent / "fixtures" / "expression.txt"
        if not path.exists():
            self.skipTest(f"Expression file {path} does not exist")
        result = self.parser.parse_file(path)
        self.assertTrue(result.success, f"Parsing failed with errors: {result.errors}")


class TestExpressionGrammar(unittest.TestCase):
    """Test the lexer, parser and listener against the antlr4 runtime"""

    def _tokens(self, text):
        lexer = ExpressionLexer(InputStream(text))
        return [(token.type, token.text) for token in lexer.getAllTokens()]

    def test_keyword_tie_breaks(self):
        """Test that equal-length matches go to the earlier rule"""
        self.assertEqual(self._tokens("o1 id o1x idx o"), [
            (ExpressionLexer.COMP, "o1"),
            (ExpressionLexer.ID, "id"),
            (ExpressionLexer.LABEL, "o1x"),
            (ExpressionLexer.LABEL, "idx"),
            (ExpressionLexer.LABEL, "o"),
        ])

    def test_decorated_labels_are_single_tokens(self):
        """Test that markers and subset superscripts stay inside the label"""
        self.assertEqual(self._tokens("sigma:i0:nu_3^{1, 2}{u}"), [
            (ExpressionLexer.LABEL, "sigma:i0:nu_3^{1, 2}"),
            (ExpressionLexer.LBRACE, "{"),
            (ExpressionLexer.LABEL, "u"),
            (ExpressionLexer.RBRACE, "}"),
        ])

    def test_parse_tree(self):
        """Test that the parser builds antlr4 rule contexts"""
        parser = ExpressionParser(CommonTokenStream(ExpressionLexer(InputStream("2*mu_2 o1 mu_2 - id"))))
        tree = parser.expression()
        self.assertIsInstance(tree, ParserRuleContext)
        self.assertEqual(tree.getRuleIndex(), ExpressionParser.RULE_expression)
        expr = tree.expr()
        self.assertEqual(len(expr.term()), 2)
        self.assertEqual(expr.term(0).scalar().INT().getText(), "2")
        self.assertEqual(len(expr.term(0).composite().COMP()), 1)
        self.assertIsNotNone(expr.sign(0).MINUS())
        self.assertEqual(tree.getText(), "2*mu_2o1mu_2-id<EOF>")

    def test_listener_receives_antlr_callbacks(self):
        """Test that the listener is an antlr4 ErrorListener fed by the parser"""
        listener = ExpressionErrorListener()
        self.assertIsInstance(listener, ErrorListener)

        parser = ExpressionParser(CommonTokenStream(ExpressionLexer(InputStream("mu_2 o1 )"))))
        parser.removeErrorListeners()
        parser.addErrorListener(listener)
        with self.assertRaises(ParseCancellationException):
            parser.expression()
        self.assertEqual(len(listener.get_errors()), 1)
        self.assertEqual(listener.get_errors()[0].column, 9)
        self.assertIn("mismatched input ')'", listener.get_errors()[0].message)

    def test_builder_is_a_visitor(self):
        """Test that the AST builder plugs into the generated visitor"""
        self.assertIsInstance(ASTBuilder(), ExpressionVisitor)
        self.assertIsInstance(ASTBuilder(), ParseTreeVisitor)


class TestEvaluator(unittest.TestCase):
    """Test evaluating expressions over a presentation"""

    def setUp(self):
        self.ainf = AInfinityPresentation()
        self.mu2 = Element.generator(self.ainf.mu(2))
        self.mu3 = Element.generator(self.ainf.mu(3))

    def test_evaluate(self):
        """Test that every construct evaluates to the matching element operation"""
        identity = Element.identity()
        self.assertEqual(parse_element(self.ainf, "mu_2 o1 mu_2"), compose_at(self.mu2, 1, self.mu2))
        self.assertEqual(parse_element(self.ainf, "mu_3(mu_2, id, mu_2)"),
                         compose_full(self.mu3, [self.mu2, identity, self.mu2]))
        self.assertEqual(parse_element(self.ainf, "mu_3{mu_2}"), brace(self.mu3, [self.mu2]))
        self.assertTrue(parse_element(self.ainf, "mu_2 o1 mu_2 - mu_2(mu_2, id)").is_zero())
        self.assertTrue(parse_element(self.ainf, "0").is_zero())
        self.assertEqual(parse_element(self.ainf, "id"), identity)

    def test_composition_is_left_associative(self):
        """Test that a o1 b o2 c reads as (a o1 b) o2 c"""
        expected = compose_at(compose_at(self.mu2, 1, self.mu2), 2, self.mu2)
        self.assertEqual(parse_element(self.ainf, "mu_2 o1 mu_2 o2 mu_2"), expected)

    def test_semantic_errors(self):
        """Test unknown labels and out-of-range slots"""
        with self.assertRaises(ExpressionError) as ctx:
            parse_element(self.ainf, "mu_2 o1 nu_2")
        self.assertIn("nu_2", str(ctx.exception))
        with self.assertRaises(ExpressionError):
            parse_element(self.ainf, "mu_2 o3 mu_2")
        with self.assertRaises(ExpressionError):
            parse_element(self.ainf, "mu_2 + mu_3")
        with self.assertRaises(ExpressionError):
            parse_element(self.ainf, "mu_2 o1")

    def test_mistagged_node(self):
        """Test that a node whose tag disagrees with its class is reported, not trusted"""
        node = IdentityNode(node_type=NodeType.COMPOSE, line=1, column=4)
        with self.assertRaises(ExpressionError) as ctx:
            Evaluator(self.ainf).evaluate(node)
        errors = ctx.exception.errors
        self.assertEqual(len(errors), 1)
        self.assertIsInstance(errors[0], SemanticError)
        self.assertEqual((errors[0].line, errors[0].column), (1, 4))
        self.assertIn("expected ComposeNode", errors[0].message)

        inner = LabelNode(node_type=NodeType.SUM, text="mu_2", line=1, column=9)
        outer = TermNode(node_type=NodeType.TERM, coeff=2, body=inner, line=1, column=1)
        with self.assertRaises(ExpressionError) as ctx:
            Evaluator(self.ainf).evaluate(outer)
        self.assertEqual(ctx.exception.errors[0].column, 9)

    def test_cylinder_labels(self):
        """Test decorated labels over a cylinder"""
        cylinder = build("cyl:ainf")
        e = parse_element(cylinder, "sigma:mu_3 o2 i1:mu_2")
        self.assertEqual(e.degree, 2)
        self.assertEqual(e.arity, 4)
        with self.assertRaises(ExpressionError):
            parse_element(cylinder, "top:mu_2")

    def test_unital_labels(self):
        """Test labels with a subset superscript and the unit"""
        unital = UnitalPresentation(1)
        e = parse_element(unital, "nu_2^{1} o1 u")
        self.assertEqual(e.arity, 0)
        self.assertEqual(parse_element(unital, "mu_2 o1 u"), Element.identity())

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=4))
    def test_render_round_trip(self, seed, arity):
        """Test that rendered elements parse back to themselves"""
        cylinder = build("cyl:ainf")
        rng = random.Random(seed)
        e = random_element(rng, cylinder_alphabet(cylinder.source, 4), 3, arity)
        self.assertEqual(parse_element(cylinder, render_element(e)), e)


if __name__ == "__main__":
    unittest.main()
