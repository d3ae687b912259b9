from typing import List

from antlr4.Token import Token

from ..ast.nodes import (
    ASTNode,
    BraceNode,
    ComposeNode,
    FullCompositionNode,
    IdentityNode,
    LabelNode,
    NodeType,
    SumNode,
    TermNode,
    ZeroNode,
)
from .grammar.ExpressionParser import ExpressionParser
from .grammar.ExpressionVisitor import ExpressionVisitor


def _position(token: Token) -> dict:
    # antlr4 columns are 0-based
    return {"line": token.line, "column": token.column + 1}


class ASTBuilder(ExpressionVisitor):
    """Builds expression AST nodes from an ``ExpressionParser`` parse tree"""

    def visitExpression(self, ctx: ExpressionParser.ExpressionContext) -> ASTNode:
        return self.visitExpr(ctx.expr())

    def visitExpr(self, ctx: ExpressionParser.ExprContext) -> ASTNode:
        term_ctxs = ctx.term()
        sign_ctxs = ctx.sign()
        # a leading sign is optional, every later term has one
        offset = len(term_ctxs) - len(sign_ctxs)

        terms: List[TermNode] = []
        for index, term_ctx in enumerate(term_ctxs):
            term = self.visitTerm(term_ctx)
            sign_index = index - offset
            if sign_index >= 0:
                sign_ctx = sign_ctxs[sign_index]
                coeff = -term.coeff if sign_ctx.MINUS() is not None else term.coeff
                term = term.model_copy(update={"coeff": coeff, **_position(sign_ctx.start)})
            terms.append(term)

        if len(terms) == 1 and terms[0].coeff == 1:
            return terms[0].body
        return SumNode(node_type=NodeType.SUM, terms=terms, **_position(ctx.start))

    def visitTerm(self, ctx: ExpressionParser.TermContext) -> TermNode:
        scalar_ctx = ctx.scalar()
        coeff = self.visitScalar(scalar_ctx) if scalar_ctx is not None else 1
        body = self.visitComposite(ctx.composite())
        return TermNode(node_type=NodeType.TERM, coeff=coeff, body=body, **_position(ctx.start))

    def visitScalar(self, ctx: ExpressionParser.ScalarContext) -> int:
        return int(ctx.INT().getText())

    def visitComposite(self, ctx: ExpressionParser.CompositeContext) -> ASTNode:
        postfixes = ctx.postfix()
        node = self.visitPostfix(postfixes[0])
        # left-associative: a o1 b o2 c is (a o1 b) o2 c
        for comp, right_ctx in zip(ctx.COMP(), postfixes[1:]):
            token = comp.getSymbol()
            node = ComposeNode(node_type=NodeType.COMPOSE, left=node, slot=int(token.text[1:]),
                               right=self.visitPostfix(right_ctx), **_position(token))
        return node

    def visitPostfix(self, ctx: ExpressionParser.PostfixContext) -> ASTNode:
        node = self.visitAtom(ctx.atom())
        # braces and argument lists apply in source order
        for suffix in ctx.getChildren():
            if isinstance(suffix, ExpressionParser.BraceContext):
                node = BraceNode(node_type=NodeType.BRACE, head=node, args=self.visitBrace(suffix),
                                 **_position(suffix.start))
            elif isinstance(suffix, ExpressionParser.ArgumentsContext):
                node = FullCompositionNode(node_type=NodeType.FULL, head=node, args=self.visitArguments(suffix),
                                           **_position(suffix.start))
        return node

    def visitBrace(self, ctx: ExpressionParser.BraceContext) -> List[ASTNode]:
        return [self.visitExpr(expr_ctx) for expr_ctx in ctx.expr()]

    def visitArguments(self, ctx: ExpressionParser.ArgumentsContext) -> List[ASTNode]:
        return [self.visitExpr(expr_ctx) for expr_ctx in ctx.expr()]

    def visitAtom(self, ctx: ExpressionParser.AtomContext) -> ASTNode:
        if ctx.LABEL() is not None:
            token = ctx.LABEL().getSymbol()
            # subset superscripts may contain whitespace
            text = "".join(token.text.split())
            return LabelNode(node_type=NodeType.LABEL, text=text, **_position(token))
        if ctx.ID() is not None:
            return IdentityNode(node_type=NodeType.IDENTITY, **_position(ctx.start))
        if ctx.INT() is not None:
            return ZeroNode(node_type=NodeType.ZERO, **_position(ctx.start))
        return self.visitExpr(ctx.expr())
