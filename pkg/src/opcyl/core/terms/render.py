"""Text rendering of monomials and elements in the expression grammar"""

from typing import Iterator, List, Optional

from .generators import Generator
from .monomial import Monomial


def render_monomial(mono: Monomial) -> str:
    """Nested bracketing ``label(child, id, ...)``; a corolla renders as its label"""
    it: Iterator[Optional[Generator]] = iter(mono.tokens)

    def walk() -> str:
        tok = next(it)
        if tok is None:
            return "id"
        children: List[str] = [walk() for _ in range(tok.arity)]
        if all(child == "id" for child in children):
            return tok.label
        return f"{tok.label}({', '.join(children)})"

    return walk()


def render_element(element) -> str:
    if element.is_zero():
        return "0"
    parts: List[str] = []
    for mono, coeff in element.sorted_terms():
        text = render_monomial(mono)
        magnitude = abs(coeff)
        body = text if magnitude == 1 else f"{magnitude}*{text}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)
