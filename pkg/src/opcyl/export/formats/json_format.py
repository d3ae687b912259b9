"""
Element JSON.

    {"arity": n, "degree": d,
     "terms": [{"coeff": "<decimal>", "tree": <node>}]}

A node is {"label": "<marker>:<name>/<arity>", "children": [...]} and a leaf
is {"leaf": k}, leaves numbered from 1 left to right. Terms are written in
the canonical monomial order, so exporting an imported element reproduces
the same text.
"""

import json
from typing import Any, Dict, Iterator, List, Optional

from ...core.errors import ArityError, PresentationError
from ...core.terms.element import Element, accumulate
from ...core.terms.generators import Generator, Marker
from ...core.terms.monomial import Monomial, Token
from ...presentation.presentation import Presentation
from ..base import Exporter


def label_key(g: Generator) -> str:
    return f"{g.marker.value}:{g.name}/{g.arity}"


def monomial_to_tree(mono: Monomial) -> Dict[str, Any]:
    tokens: Iterator[Token] = iter(mono.tokens)
    leaves = 0

    def walk() -> Dict[str, Any]:
        nonlocal leaves
        tok = next(tokens)
        if tok is None:
            leaves += 1
            return {"leaf": leaves}
        return {"label": label_key(tok), "children": [walk() for _ in range(tok.arity)]}

    return walk()


def element_to_dict(element: Element) -> Dict[str, Any]:
    return {
        "arity": element.arity,
        "degree": element.degree,
        "terms": [{"coeff": str(coeff), "tree": monomial_to_tree(mono)} for mono, coeff in element.sorted_terms()],
    }


def _resolve(presentation: Presentation, key: str) -> Generator:
    text, sep, arity_text = key.rpartition("/")
    if not sep or not arity_text.isdigit():
        raise PresentationError(f"Malformed label '{key}'")
    head, _, name = text.partition(":")
    try:
        marker = Marker(head)
    except ValueError:
        raise PresentationError(f"Unknown marker in label '{key}'") from None
    g = presentation.resolve(name if marker is Marker.PLAIN else f"{marker.value}:{name}")
    if g.arity != int(arity_text):
        raise ArityError(f"Label '{key}' resolves to {g.label} of arity {g.arity}")
    return g


def tree_to_monomial(tree: Dict[str, Any], presentation: Presentation) -> Monomial:
    tokens: List[Token] = []

    def walk(node: Dict[str, Any]) -> None:
        if "leaf" in node:
            tokens.append(None)
            return
        g = _resolve(presentation, node["label"])
        children = node.get("children", [])
        if len(children) != g.arity:
            raise ArityError(f"{g.label} has {len(children)} children, expected {g.arity}")
        tokens.append(g)
        for child in children:
            walk(child)

    walk(tree)
    return Monomial(tokens).checked()


def element_from_dict(data: Dict[str, Any], presentation: Presentation) -> Element:
    """Rebuild an element, resolving every label against ``presentation``"""
    terms: Dict[Monomial, int] = {}
    for entry in data.get("terms", []):
        accumulate(terms, tree_to_monomial(entry["tree"], presentation), int(entry["coeff"]))
    return Element(terms, data.get("arity"), data.get("degree"))


class JsonExporter(Exporter):
    """Exporter for element JSON"""

    file_suffix = ".json"

    def render(self, element: Element, name: str = "e", **options) -> str:
        """
        Element JSON text

        Args:
            element: The element to render
            name: unused; JSON carries no name
            **options: Additional options for the exporter
                - indent: The indentation level, default 2
        """
        indent: Optional[int] = options.get("indent", 2)
        return json.dumps(element_to_dict(element), indent=indent) + "\n"

    def load(self, text: str, presentation: Presentation) -> Element:
        return element_from_dict(json.loads(text), presentation)
