"""Evaluation of expression ASTs to elements over a presentation's alphabet"""

import logging
from typing import List, Type, TypeVar

from pydantic import BaseModel

from ..ast.nodes import (
    ASTNode,
    BraceNode,
    ComposeNode,
    FullCompositionNode,
    LabelNode,
    NodeType,
    SumNode,
    TermNode,
)
from ..errors import ExpressionError, OperadError
from ..parser import Parser
from ..terms.composition import brace, compose_at, compose_full
from ..terms.element import Element

logger = logging.getLogger(__name__)

N = TypeVar("N", bound=ASTNode)


class SemanticError(BaseModel):
    """Represents an evaluation error"""
    message: str
    line: int
    column: int
    severity: str = "error"


class _Failed(Exception):
    pass


class Evaluator:
    """Evaluates expression nodes against the alphabet of a presentation"""

    def __init__(self, presentation):
        self.presentation = presentation
        self.errors: List[SemanticError] = []

    def evaluate(self, node: ASTNode) -> Element:
        """Evaluate a node; raises ExpressionError carrying the collected errors"""
        self.errors = []
        try:
            return self._eval(node)
        except _Failed:
            raise ExpressionError(self.errors[0].message, self.errors) from None

    def add_error(self, message: str, node: ASTNode, severity: str = "error") -> None:
        self.errors.append(SemanticError(message=message, line=node.line, column=node.column, severity=severity))

    def _eval(self, node: ASTNode) -> Element:
        base = self.presentation.base
        node_type = node.node_type
        try:
            if node_type is NodeType.LABEL:
                label = self._expect(node, LabelNode)
                return Element.generator(self.presentation.resolve(label.text))
            if node_type is NodeType.IDENTITY:
                return Element.identity()
            if node_type is NodeType.ZERO:
                return Element.zero()
            if node_type is NodeType.COMPOSE:
                compose = self._expect(node, ComposeNode)
                return compose_at(self._eval(compose.left), compose.slot, self._eval(compose.right), base)
            if node_type is NodeType.FULL:
                full = self._expect(node, FullCompositionNode)
                head = self._eval(full.head)
                return compose_full(head, [self._eval(arg) for arg in full.args], base)
            if node_type is NodeType.BRACE:
                braced = self._expect(node, BraceNode)
                head = self._eval(braced.head)
                return brace(head, [self._eval(arg) for arg in braced.args], base)
            if node_type is NodeType.TERM:
                term = self._expect(node, TermNode)
                return self._eval(term.body).scale(term.coeff)
            if node_type is NodeType.SUM:
                total = Element.zero()
                for summand in self._expect(node, SumNode).terms:
                    total = total + self._eval(summand)
                return total
        except OperadError as exc:
            if isinstance(exc, ExpressionError):
                raise
            self.add_error(str(exc), node)
            raise _Failed() from exc
        self.add_error(f"Unsupported node type {node_type}", node)
        raise _Failed()

    def _expect(self, node: ASTNode, node_class: Type[N]) -> N:
        """Return ``node`` as ``node_class``; a tag that disagrees with the class is an error"""
        if not isinstance(node, node_class):
            self.add_error(f"Node tagged {node.node_type.value} is a {type(node).__name__}, "
                           f"expected {node_class.__name__}", node)
            raise _Failed()
        return node


def parse_element(presentation, text: str) -> Element:
    """Parse and evaluate ``text`` over the alphabet of ``presentation``"""
    result = Parser().parse_string(text)
    if not result.success:
        first = result.errors[0]
        raise ExpressionError(
            f"Syntax error at line {first.line}, column {first.column}: {first.message}", result.errors
        )
    logger.debug("Evaluating %r over %s", text, getattr(presentation, "name", presentation))
    return Evaluator(presentation).evaluate(result.ast)
