"""Token source for Expression.g4 over the antlr4 runtime"""

import re
import sys
from typing import List, Optional, TextIO, Tuple

from antlr4 import InputStream
from antlr4.Lexer import TokenSource
from antlr4.Recognizer import Recognizer
from antlr4.Token import CommonToken, Token

_SPACE = r"[ \t\r\n]"
_MARKER = r"(?:i0|i1|sigma0|sigma1|sigma|bot|mid|top)"
_SUBSET = rf"\^\{{{_SPACE}*[0-9]+(?:{_SPACE}*,{_SPACE}*[0-9]+)*{_SPACE}*\}}"
_NAME = rf"[A-Za-z][A-Za-z0-9]*(?:_[0-9]+)?(?:{_SUBSET})?"


class ExpressionLexer(Recognizer, TokenSource):
    """
    Longest match over the lexer rules; on a tie the rule listed first wins,
    so ``o1`` is COMP and ``id`` is ID while ``o1x`` and ``idx`` are labels
    """

    grammarFileName = "Expression.g4"

    COMP = 1
    ID = 2
    LABEL = 3
    INT = 4
    PLUS = 5
    MINUS = 6
    STAR = 7
    COMMA = 8
    LPAREN = 9
    RPAREN = 10
    LBRACE = 11
    RBRACE = 12
    WS = 13

    literalNames = ["<INVALID>", "<INVALID>", "'id'", "<INVALID>", "<INVALID>", "'+'", "'-'", "'*'", "','",
                    "'('", "')'", "'{'", "'}'"]
    symbolicNames = ["<INVALID>", "COMP", "ID", "LABEL", "INT", "PLUS", "MINUS", "STAR", "COMMA",
                     "LPAREN", "RPAREN", "LBRACE", "RBRACE", "WS"]
    ruleNames = ["COMP", "ID", "LABEL", "INT", "PLUS", "MINUS", "STAR", "COMMA", "LPAREN", "RPAREN",
                 "LBRACE", "RBRACE", "WS", "MARKER", "NAME", "SUBSET", "SPACE"]

    RULES: List[Tuple[int, re.Pattern]] = [
        (COMP, re.compile(r"o[0-9]+")),
        (ID, re.compile(r"id")),
        (LABEL, re.compile(rf"(?:{_MARKER}:)*{_NAME}")),
        (INT, re.compile(r"[0-9]+")),
        (PLUS, re.compile(r"\+")),
        (MINUS, re.compile(r"-")),
        (STAR, re.compile(r"\*")),
        (COMMA, re.compile(r",")),
        (LPAREN, re.compile(r"\(")),
        (RPAREN, re.compile(r"\)")),
        (LBRACE, re.compile(r"\{")),
        (RBRACE, re.compile(r"\}")),
        (WS, re.compile(rf"{_SPACE}+")),
    ]

    def __init__(self, input: InputStream, output: TextIO = sys.stdout):
        super().__init__()
        self._input = input
        self._output = output
        self._data = input.strdata
        self._pos = 0
        self._tokenFactorySourcePair = (self, input)
        # position of the next character, column 0-based as in antlr4
        self.line = 1
        self.column = 0

    def getSourceName(self) -> str:
        return getattr(self._input, "name", "<unknown>")

    def getInputStream(self) -> InputStream:
        return self._input

    def nextToken(self) -> Token:
        while self._pos < len(self._data):
            best_type, best_end = None, self._pos
            for token_type, pattern in self.RULES:
                match = pattern.match(self._data, self._pos)
                if match is not None and match.end() > best_end:
                    best_type, best_end = token_type, match.end()

            if best_type is None:
                self._recognition_error()
                continue

            start, line, column = self._pos, self.line, self.column
            self._advance(best_end)
            if best_type == self.WS:
                continue
            return self._emit(best_type, start, best_end - 1, line, column)

        return self._emit(Token.EOF, self._pos, self._pos - 1, self.line, self.column, "<EOF>")

    def getAllTokens(self) -> List[Token]:
        tokens = []
        token = self.nextToken()
        while token.type != Token.EOF:
            tokens.append(token)
            token = self.nextToken()
        return tokens

    def _emit(self, token_type: int, start: int, stop: int, line: int, column: int,
              text: Optional[str] = None) -> Token:
        token = CommonToken(self._tokenFactorySourcePair, token_type, Token.DEFAULT_CHANNEL, start, stop)
        token.line = line
        token.column = column
        token.text = text if text is not None else self._data[start:stop + 1]
        return token

    def _advance(self, end: int) -> None:
        chunk = self._data[self._pos:end]
        newlines = chunk.count("\n")
        if newlines:
            self.line += newlines
            self.column = len(chunk) - chunk.rfind("\n") - 1
        else:
            self.column += len(chunk)
        self._pos = end

    def _recognition_error(self) -> None:
        text = self._data[self._pos].replace("\n", "\\n").replace("\t", "\\t")
        self.getErrorListenerDispatch().syntaxError(
            self, None, self.line, self.column, f"token recognition error at: '{text}'", None
        )
        self._advance(self._pos + 1)
