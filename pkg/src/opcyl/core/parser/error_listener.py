from typing import List

from antlr4.error.ErrorListener import ErrorListener
from pydantic import BaseModel


class ExpressionSyntaxError(BaseModel):
    """Represents a syntax error, with a 1-based column"""
    message: str
    line: int
    column: int
    severity: str = "error"


class ExpressionErrorListener(ErrorListener):
    """Collects syntax errors reported by the expression lexer and parser"""

    def __init__(self):
        super().__init__()
        self.errors: List[ExpressionSyntaxError] = []

    def syntaxError(self, recognizer, offendingSymbol, line, column, msg, e):
        """Called when a syntax error occurs"""
        self.errors.append(ExpressionSyntaxError(message=msg, line=line, column=column + 1))

    def get_errors(self) -> List[ExpressionSyntaxError]:
        """Get all syntax errors"""
        return self.errors

    def has_errors(self) -> bool:
        """Check if there are any syntax errors"""
        return len(self.errors) > 0
