"""Parser for Expression.g4 producing antlr4 parse trees"""

import sys
from typing import FrozenSet, Optional, TextIO

from antlr4 import CommonTokenStream, ParserRuleContext
from antlr4.error.Errors import ParseCancellationException
from antlr4.Recognizer import Recognizer
from antlr4.Token import Token
from antlr4.tree.Tree import ParseTreeVisitor

from .ExpressionLexer import ExpressionLexer


class ExpressionParser(Recognizer):
    """
    One method per grammar rule, each returning its context. The grammar is
    LL(2): the only second lookahead decides whether an integer is a scalar.
    Parsing stops at the first syntax error, after reporting it to the error
    listeners, by raising ``ParseCancellationException``.
    """

    grammarFileName = "Expression.g4"

    literalNames = ExpressionLexer.literalNames
    symbolicNames = ExpressionLexer.symbolicNames

    EOF = Token.EOF
    COMP = ExpressionLexer.COMP
    ID = ExpressionLexer.ID
    LABEL = ExpressionLexer.LABEL
    INT = ExpressionLexer.INT
    PLUS = ExpressionLexer.PLUS
    MINUS = ExpressionLexer.MINUS
    STAR = ExpressionLexer.STAR
    COMMA = ExpressionLexer.COMMA
    LPAREN = ExpressionLexer.LPAREN
    RPAREN = ExpressionLexer.RPAREN
    LBRACE = ExpressionLexer.LBRACE
    RBRACE = ExpressionLexer.RBRACE

    RULE_expression = 0
    RULE_expr = 1
    RULE_sign = 2
    RULE_term = 3
    RULE_scalar = 4
    RULE_composite = 5
    RULE_postfix = 6
    RULE_brace = 7
    RULE_arguments = 8
    RULE_atom = 9

    ruleNames = ["expression", "expr", "sign", "term", "scalar", "composite", "postfix", "brace",
                 "arguments", "atom"]

    SIGNS: FrozenSet[int] = frozenset({PLUS, MINUS})
    SCALAR_FOLLOW: FrozenSet[int] = frozenset({STAR, LABEL, ID, LPAREN})

    class RuleContext(ParserRuleContext):
        """Common accessors; ``RULE`` and ``VISIT`` name the rule and its visitor method"""

        RULE = -1
        VISIT = ""

        def __init__(self, parser, parent: Optional[ParserRuleContext] = None, invokingState: int = -1):
            super().__init__(parent, invokingState)
            self.parser = parser

        def getRuleIndex(self) -> int:
            return self.RULE

        def accept(self, visitor: ParseTreeVisitor):
            method = getattr(visitor, self.VISIT, None)
            if method is not None:
                return method(self)
            return visitor.visitChildren(self)

        def rules(self, ctx_type, i: Optional[int] = None):
            if i is None:
                return self.getTypedRuleContexts(ctx_type)
            return self.getTypedRuleContext(ctx_type, i)

        def tokens(self, token_type: int, i: Optional[int] = None):
            if i is None:
                return self.getTokens(token_type)
            return self.getToken(token_type, i)

    class ExpressionContext(RuleContext):
        RULE = 0
        VISIT = "visitExpression"

        def expr(self):
            return self.rules(ExpressionParser.ExprContext, 0)

        def EOF(self):
            return self.tokens(ExpressionParser.EOF, 0)

    class ExprContext(RuleContext):
        RULE = 1
        VISIT = "visitExpr"

        def sign(self, i: Optional[int] = None):
            return self.rules(ExpressionParser.SignContext, i)

        def term(self, i: Optional[int] = None):
            return self.rules(ExpressionParser.TermContext, i)

    class SignContext(RuleContext):
        RULE = 2
        VISIT = "visitSign"

        def PLUS(self):
            return self.tokens(ExpressionParser.PLUS, 0)

        def MINUS(self):
            return self.tokens(ExpressionParser.MINUS, 0)

    class TermContext(RuleContext):
        RULE = 3
        VISIT = "visitTerm"

        def scalar(self):
            return self.rules(ExpressionParser.ScalarContext, 0)

        def composite(self):
            return self.rules(ExpressionParser.CompositeContext, 0)

    class ScalarContext(RuleContext):
        RULE = 4
        VISIT = "visitScalar"

        def INT(self):
            return self.tokens(ExpressionParser.INT, 0)

        def STAR(self):
            return self.tokens(ExpressionParser.STAR, 0)

    class CompositeContext(RuleContext):
        RULE = 5
        VISIT = "visitComposite"

        def postfix(self, i: Optional[int] = None):
            return self.rules(ExpressionParser.PostfixContext, i)

        def COMP(self, i: Optional[int] = None):
            return self.tokens(ExpressionParser.COMP, i)

    class PostfixContext(RuleContext):
        RULE = 6
        VISIT = "visitPostfix"

        def atom(self):
            return self.rules(ExpressionParser.AtomContext, 0)

        def brace(self, i: Optional[int] = None):
            return self.rules(ExpressionParser.BraceContext, i)

        def arguments(self, i: Optional[int] = None):
            return self.rules(ExpressionParser.ArgumentsContext, i)

    class BraceContext(RuleContext):
        RULE = 7
        VISIT = "visitBrace"

        def expr(self, i: Optional[int] = None):
            return self.rules(ExpressionParser.ExprContext, i)

    class ArgumentsContext(RuleContext):
        RULE = 8
        VISIT = "visitArguments"

        def expr(self, i: Optional[int] = None):
            return self.rules(ExpressionParser.ExprContext, i)

    class AtomContext(RuleContext):
        RULE = 9
        VISIT = "visitAtom"

        def LABEL(self):
            return self.tokens(ExpressionParser.LABEL, 0)

        def ID(self):
            return self.tokens(ExpressionParser.ID, 0)

        def INT(self):
            return self.tokens(ExpressionParser.INT, 0)

        def expr(self):
            return self.rules(ExpressionParser.ExprContext, 0)

    def __init__(self, input: CommonTokenStream, output: TextIO = sys.stdout):
        super().__init__()
        self._input = input
        self._output = output
        self._ctx: Optional[ParserRuleContext] = None

    def getInputStream(self) -> CommonTokenStream:
        return self._input

    # rules

    def expression(self) -> "ExpressionParser.ExpressionContext":
        localctx = self._enter(ExpressionParser.ExpressionContext)
        try:
            self.expr()
            self._match(self.EOF)
        finally:
            self._exit()
        return localctx

    def expr(self) -> "ExpressionParser.ExprContext":
        localctx = self._enter(ExpressionParser.ExprContext)
        try:
            if self._la(1) in self.SIGNS:
                self.sign()
            self.term()
            while self._la(1) in self.SIGNS:
                self.sign()
                self.term()
        finally:
            self._exit()
        return localctx

    def sign(self) -> "ExpressionParser.SignContext":
        localctx = self._enter(ExpressionParser.SignContext)
        try:
            if self._la(1) == self.MINUS:
                self._match(self.MINUS)
            else:
                self._match(self.PLUS)
        finally:
            self._exit()
        return localctx

    def term(self) -> "ExpressionParser.TermContext":
        localctx = self._enter(ExpressionParser.TermContext)
        try:
            if self._la(1) == self.INT and self._la(2) in self.SCALAR_FOLLOW:
                self.scalar()
            self.composite()
        finally:
            self._exit()
        return localctx

    def scalar(self) -> "ExpressionParser.ScalarContext":
        localctx = self._enter(ExpressionParser.ScalarContext)
        try:
            self._match(self.INT)
            if self._la(1) == self.STAR:
                self._match(self.STAR)
        finally:
            self._exit()
        return localctx

    def composite(self) -> "ExpressionParser.CompositeContext":
        localctx = self._enter(ExpressionParser.CompositeContext)
        try:
            self.postfix()
            while self._la(1) == self.COMP:
                self._match(self.COMP)
                self.postfix()
        finally:
            self._exit()
        return localctx

    def postfix(self) -> "ExpressionParser.PostfixContext":
        localctx = self._enter(ExpressionParser.PostfixContext)
        try:
            self.atom()
            while self._la(1) in (self.LBRACE, self.LPAREN):
                if self._la(1) == self.LBRACE:
                    self.brace()
                else:
                    self.arguments()
        finally:
            self._exit()
        return localctx

    def brace(self) -> "ExpressionParser.BraceContext":
        localctx = self._enter(ExpressionParser.BraceContext)
        try:
            self._match(self.LBRACE)
            if self._la(1) != self.RBRACE:
                self._expr_list()
            self._match(self.RBRACE)
        finally:
            self._exit()
        return localctx

    def arguments(self) -> "ExpressionParser.ArgumentsContext":
        localctx = self._enter(ExpressionParser.ArgumentsContext)
        try:
            self._match(self.LPAREN)
            self._expr_list()
            self._match(self.RPAREN)
        finally:
            self._exit()
        return localctx

    def atom(self) -> "ExpressionParser.AtomContext":
        localctx = self._enter(ExpressionParser.AtomContext)
        try:
            token = self._input.LT(1)
            if token.type in (self.LABEL, self.ID):
                self._match(token.type)
            elif token.type == self.INT:
                if token.text.strip("0") != "":
                    self._error(token, f"Scalar {token.text} must multiply a composite")
                self._match(self.INT)
            elif token.type == self.LPAREN:
                self._match(self.LPAREN)
                self.expr()
                self._match(self.RPAREN)
            else:
                self._error(token, f"mismatched input {self._display(token)} expecting {{LABEL, 'id', '0', '('}}")
        finally:
            self._exit()
        return localctx

    # recognizer plumbing

    def _expr_list(self) -> None:
        self.expr()
        while self._la(1) == self.COMMA:
            self._match(self.COMMA)
            self.expr()

    def _la(self, k: int) -> int:
        return self._input.LA(k)

    def _enter(self, ctx_type):
        ctx = ctx_type(self, self._ctx, ctx_type.RULE)
        ctx.start = self._input.LT(1)
        if self._ctx is not None:
            self._ctx.addChild(ctx)
        self._ctx = ctx
        return ctx

    def _exit(self) -> None:
        ctx = self._ctx
        ctx.stop = self._input.LT(-1)
        self._ctx = ctx.parentCtx

    def _match(self, token_type: int) -> Token:
        token = self._input.LT(1)
        if token.type != token_type:
            self._error(token, f"mismatched input {self._display(token)} expecting {self._name(token_type)}")
        self._ctx.addTokenNode(token)
        if token_type != Token.EOF:
            self._input.consume()
        return token

    def _error(self, token: Token, message: str) -> None:
        self.getErrorListenerDispatch().syntaxError(self, token, token.line, token.column, message, None)
        raise ParseCancellationException(message)

    def _name(self, token_type: int) -> str:
        if token_type == Token.EOF:
            return "<EOF>"
        literal = self.literalNames[token_type] if token_type < len(self.literalNames) else "<INVALID>"
        return literal if literal != "<INVALID>" else self.symbolicNames[token_type]

    @staticmethod
    def _display(token: Token) -> str:
        text = token.text if token.text is not None else f"<{token.type}>"
        return "'" + text.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t") + "'"
