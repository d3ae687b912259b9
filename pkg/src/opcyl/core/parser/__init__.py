from pathlib import Path
from typing import List, Optional, Union

from antlr4 import CommonTokenStream, FileStream, InputStream
from antlr4.error.Errors import ParseCancellationException
from pydantic import BaseModel

from ..ast.nodes import ASTNode
from .builder import ASTBuilder
from .error_listener import ExpressionErrorListener, ExpressionSyntaxError
from .grammar.ExpressionLexer import ExpressionLexer
from .grammar.ExpressionParser import ExpressionParser


class ParseResult(BaseModel):
    """Result of parsing an element expression"""
    ast: Optional[ASTNode]
    errors: List[ExpressionSyntaxError]
    success: bool


class Parser:
    """Parser for the element expression grammar"""

    def __init__(self):
        self.builder = ASTBuilder()
        self.error_listener = ExpressionErrorListener()

    def parse_string(self, input_string: str) -> ParseResult:
        """Parse an expression string"""
        return self._parse(InputStream(input_string))

    def parse_file(self, file_path: Union[str, Path]) -> ParseResult:
        """Parse an expression stored in a file"""
        return self._parse(FileStream(str(file_path), encoding="utf-8"))

    def _parse(self, input_stream: InputStream) -> ParseResult:
        """Parse an input stream"""
        self.error_listener = ExpressionErrorListener()

        lexer = ExpressionLexer(input_stream)
        lexer.removeErrorListeners()
        lexer.addErrorListener(self.error_listener)

        token_stream = CommonTokenStream(lexer)
        parser = ExpressionParser(token_stream)
        parser.removeErrorListeners()
        parser.addErrorListener(self.error_listener)

        try:
            parse_tree = parser.expression()
        except ParseCancellationException:
            return ParseResult(ast=None, errors=self.error_listener.get_errors(), success=False)

        # lexer errors skip the offending character and leave a parseable stream
        if self.error_listener.has_errors():
            return ParseResult(ast=None, errors=self.error_listener.get_errors(), success=False)

        ast = self.builder.visit(parse_tree)
        return ParseResult(ast=ast, errors=[], success=True)


__all__ = ["ExpressionSyntaxError", "ParseResult", "Parser"]
