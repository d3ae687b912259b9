from antlr4.tree.Tree import ParseTreeVisitor

from .ExpressionParser import ExpressionParser


class ExpressionVisitor(ParseTreeVisitor):
    """Visitor over Expression.g4 parse trees; every rule defaults to its children"""

    def visitExpression(self, ctx: ExpressionParser.ExpressionContext):
        return self.visitChildren(ctx)

    def visitExpr(self, ctx: ExpressionParser.ExprContext):
        return self.visitChildren(ctx)

    def visitSign(self, ctx: ExpressionParser.SignContext):
        return self.visitChildren(ctx)

    def visitTerm(self, ctx: ExpressionParser.TermContext):
        return self.visitChildren(ctx)

    def visitScalar(self, ctx: ExpressionParser.ScalarContext):
        return self.visitChildren(ctx)

    def visitComposite(self, ctx: ExpressionParser.CompositeContext):
        return self.visitChildren(ctx)

    def visitPostfix(self, ctx: ExpressionParser.PostfixContext):
        return self.visitChildren(ctx)

    def visitBrace(self, ctx: ExpressionParser.BraceContext):
        return self.visitChildren(ctx)

    def visitArguments(self, ctx: ExpressionParser.ArgumentsContext):
        return self.visitChildren(ctx)

    def visitAtom(self, ctx: ExpressionParser.AtomContext):
        return self.visitChildren(ctx)


del ExpressionParser
