import re
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import jinja2

from ...core.terms.element import Element
from ...core.terms.generators import Generator, Marker, split_marker
from ...core.terms.monomial import Monomial
from ..base import Exporter

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"

# monomials with more vertices are printed as nested expressions
MAX_TREE_VERTICES = 6

_MARKER_TEX = {
    Marker.I0: r"i_0",
    Marker.I1: r"i_1",
    Marker.SIGMA: r"\sigma",
    Marker.BOT: r"\mathrm{bot}",
    Marker.SIGMA0: r"\sigma^0",
    Marker.MID: r"\mathrm{mid}",
    Marker.SIGMA1: r"\sigma^1",
    Marker.TOP: r"\mathrm{top}",
}
_GREEK = {"mu": r"\mu", "nu": r"\nu", "lambda": r"\lambda"}
_NAME = re.compile(r"^([A-Za-z]+)(?:_(\d+))?(?:\^\{([\d,]*)\})?$")


def latex_name(text: str) -> str:
    """LaTeX for a label text, markers nested outermost first"""
    marker, rest = split_marker(text)
    if marker is not None:
        return f"{_MARKER_TEX[marker]}({latex_name(rest)})"
    if text.startswith("lambda-"):
        return rf"\Lambda {latex_name(text[len('lambda-'):])}"
    match = _NAME.match(text)
    if not match:
        return r"\mathrm{" + text.replace("_", r"\_") + "}"
    stem, index, subset = match.groups()
    out = _GREEK.get(stem, stem if len(stem) == 1 else r"\mathrm{" + stem + "}")
    if index:
        out += "_{" + index + "}"
    if subset is not None:
        out += r"^{\{" + subset + r"\}}"
    return out


def latex_label(g: Generator) -> str:
    return latex_name(g.label)


def latex_monomial(mono: Monomial) -> str:
    it: Iterator[Optional[Generator]] = iter(mono.tokens)

    def walk() -> str:
        tok = next(it)
        if tok is None:
            return r"\mathrm{id}"
        children = [walk() for _ in range(tok.arity)]
        if all(child == r"\mathrm{id}" for child in children):
            return latex_label(tok)
        return latex_label(tok) + r"\left(" + ", ".join(children) + r"\right)"

    return walk()


def tree_node(mono: Monomial) -> Optional[Dict[str, Any]]:
    """Nested label/children dicts for the tree template; leaves are None"""
    it: Iterator[Optional[Generator]] = iter(mono.tokens)

    def walk() -> Optional[Dict[str, Any]]:
        tok = next(it)
        if tok is None:
            return None
        return {"label": latex_label(tok), "children": [walk() for _ in range(tok.arity)]}

    return walk()


def create_latex_env() -> jinja2.Environment:
    """Jinja2 environment with delimiters that leave LaTeX braces alone"""
    return jinja2.Environment(
        loader=jinja2.FileSystemLoader(str(TEMPLATE_DIR)),
        block_start_string=r"\BLOCK{",
        block_end_string="}",
        variable_start_string=r"\VAR{",
        variable_end_string="}",
        comment_start_string=r"\#{",
        comment_end_string="}",
        line_statement_prefix="%%",
        line_comment_prefix="%#",
        trim_blocks=True,
        autoescape=False,
    )


class LatexExporter(Exporter):
    """Exporter for LaTeX; small monomials are drawn as TikZ trees"""

    file_suffix = ".tex"

    def __init__(self, env: Optional[jinja2.Environment] = None):
        self.env = env or create_latex_env()

    def terms_context(self, element: Element, trees: bool) -> List[Dict[str, Any]]:
        terms = []
        for index, (mono, coeff) in enumerate(element.sorted_terms()):
            if coeff < 0:
                sign = "-"
            else:
                sign = "+" if index else ""
            magnitude = abs(coeff)
            draw = trees and not mono.is_identity and mono.vertex_count <= MAX_TREE_VERTICES
            terms.append({
                "sign": sign,
                "coeff": "" if magnitude == 1 else str(magnitude),
                "tree": tree_node(mono) if draw else None,
                "expression": latex_monomial(mono),
            })
        return terms

    def render(self, element: Element, name: str = "e", **options) -> str:
        """
        LaTeX source for an element

        Args:
            element: The element to render
            name: Printed on the left of the equation
            **options: Additional options for the exporter
                - trees: Draw small monomials as trees, default True
                - standalone: Wrap in a compilable document, default False
        """
        template = self.env.get_template("element.tex.j2")
        return template.render(
            name=latex_name(name),
            arity=element.arity,
            degree=element.degree,
            zero=element.is_zero(),
            terms=self.terms_context(element, options.get("trees", True)),
            standalone=options.get("standalone", False),
        )
