"""
Closed cylinder formulas for linear presentations.

When every boundary is a constant part plus terms with a single cell vertex,
d(sigma x) = i0 x - i1 x - sigma(d1 x), where sigma of a one-cell monomial
moves the marker onto that vertex with the sign of passing the labels before
it. The same formula glues two cylinders along i1 = i0 and gives the doubling
and reversing maps.
"""

import logging
from typing import Dict, List, Optional

from ..core.errors import NotLinearError, UnknownGeneratorError
from ..core.terms.element import Element, accumulate
from ..core.terms.generators import DOUBLE_MARKERS, Generator, Marker, marked, split_marker
from ..core.terms.monomial import Monomial
from ..core.terms.signs import sign_power
from ..presentation.morphism import OperadMap
from ..presentation.presentation import LinearParts, Presentation
from .labels import relabel_element
from .presentation import CylinderPresentation

logger = logging.getLogger(__name__)

_END_OF = {Marker.SIGMA: (Marker.I0, Marker.I1), Marker.SIGMA0: (Marker.BOT, Marker.MID),
           Marker.SIGMA1: (Marker.MID, Marker.TOP)}


def linear_sigma(e: Element, marker: Marker = Marker.SIGMA) -> Element:
    """
    sigma on one-cell monomials: decorate the cell vertex with ``marker``,
    all other labels left alone, signed by the degrees of the labels before it

    Raises:
        NotLinearError: if a monomial has no cell vertex or more than one
    """
    terms: Dict[Monomial, int] = {}
    for mono, coeff in e.terms.items():
        cells = [pos for pos, tok in enumerate(mono.tokens) if tok is not None and tok.is_cell]
        if len(cells) != 1:
            raise NotLinearError(f"sigma needs exactly one cell vertex, got {len(cells)}")
        pos = cells[0]
        passed = sum(tok.degree for tok in mono.tokens[:pos] if tok is not None)
        tokens = list(mono.tokens)
        tokens[pos] = marked(tokens[pos], marker)
        accumulate(terms, Monomial(tokens), sign_power(passed) * coeff)
    degree = None if e.degree is None else e.degree + 1
    return Element(terms, e.arity, degree)


def linear_sigma_differential(source: Presentation, x: Generator, marker: Marker = Marker.SIGMA) -> Element:
    """
    i0 x - i1 x - sigma(d1 x) for a cell x of a linear presentation

    With ``marker`` sigma0 or sigma1 the ends are the matching copies of the
    double cylinder.
    """
    parts = require_linear_cell(source, x)
    lower, upper = _END_OF[marker]
    ends = Element.generator(marked(x, lower)) - Element.generator(marked(x, upper))
    return ends - linear_sigma(parts.d1, marker)


def require_linear_cell(source: Presentation, x: Generator) -> LinearParts:
    parts = source.linear_parts(x)
    if not parts.rest.is_zero():
        raise NotLinearError(f"'{source.name}' is not linear: boundary of {x.label} has several cell vertices")
    return parts


def require_linear(source: Presentation, max_arity: int) -> None:
    for g in source.generators(max_arity):
        require_linear_cell(source, g)


class DoubleCylinderPresentation(Presentation):
    """
    The pasted double cylinder I(O) glued to I(O) along i1 = i0

    Five copies per cell x: bot = j0 i0 x, sigma0 = j0 sigma x,
    mid = j0 i1 x = j1 i0 x, sigma1 = j1 sigma x, top = j1 i1 x.
    """

    def __init__(self, source: Presentation):
        super().__init__(f"dcyl:{source.name}", source.base)
        self.source = source

    def generators(self, max_arity: int) -> List[Generator]:
        found = [marked(x, m) for x in self.source.generators(max_arity) for m in DOUBLE_MARKERS]
        return sorted(found, key=lambda g: (g.stage, g.arity, g.label))

    def resolve_cell(self, label: str) -> Generator:
        marker, rest = split_marker(label)
        if marker not in DOUBLE_MARKERS:
            raise UnknownGeneratorError(label, self.name)
        x = self.source.resolve(rest)
        if x.is_base:
            raise UnknownGeneratorError(label, self.name)
        return marked(x, marker)

    def underlying(self, g: Generator) -> Generator:
        return g if g.is_base else self.source.resolve(g.name)

    def compute_boundary(self, g: Generator) -> Element:
        x = self.underlying(g)
        if g.marker in (Marker.SIGMA0, Marker.SIGMA1):
            return linear_sigma_differential(self.source, x, g.marker)
        return relabel_element(self.source.boundary(x), lambda y: marked(y, g.marker))


def _copy_rule(target_of: Dict[Marker, Marker], labels_source: CylinderPresentation):
    def rule(g: Generator) -> Optional[Element]:
        x = labels_source.labels.underlying(g)
        return Element.generator(marked(x, target_of[g.marker]))
    return rule


def doubling_map(cylinder: CylinderPresentation, double: DoubleCylinderPresentation,
                 max_arity: Optional[int] = None) -> OperadMap:
    """nu: I(O) -> I(O) u I(O); i0 to bot, i1 to top, sigma to sigma0 + sigma1"""
    if max_arity is not None:
        require_linear(cylinder.source, max_arity)

    def rule(g: Generator) -> Optional[Element]:
        x = cylinder.labels.underlying(g)
        if g.marker is Marker.I0:
            return Element.generator(marked(x, Marker.BOT))
        if g.marker is Marker.I1:
            return Element.generator(marked(x, Marker.TOP))
        require_linear_cell(cylinder.source, x)
        return Element.generator(marked(x, Marker.SIGMA0)) + Element.generator(marked(x, Marker.SIGMA1))

    return OperadMap("nu", cylinder, double, rule)


def reversing_map(cylinder: CylinderPresentation, max_arity: Optional[int] = None) -> OperadMap:
    """iota: I(O) -> I(O); swaps the ends and negates sigma"""
    if max_arity is not None:
        require_linear(cylinder.source, max_arity)

    def rule(g: Generator) -> Optional[Element]:
        x = cylinder.labels.underlying(g)
        if g.marker is Marker.I0:
            return Element.generator(marked(x, Marker.I1))
        if g.marker is Marker.I1:
            return Element.generator(marked(x, Marker.I0))
        require_linear_cell(cylinder.source, x)
        return -Element.generator(g)

    return OperadMap("iota", cylinder, cylinder, rule)


def inclusion_maps(cylinder: CylinderPresentation, double: DoubleCylinderPresentation) -> List[OperadMap]:
    """j0 and j1: the two copies of I(O) inside the double cylinder"""
    j0 = _copy_rule({Marker.I0: Marker.BOT, Marker.SIGMA: Marker.SIGMA0, Marker.I1: Marker.MID}, cylinder)
    j1 = _copy_rule({Marker.I0: Marker.MID, Marker.SIGMA: Marker.SIGMA1, Marker.I1: Marker.TOP}, cylinder)
    return [OperadMap("j0", cylinder, double, j0), OperadMap("j1", cylinder, double, j1)]


def glued_projection(double: DoubleCylinderPresentation) -> OperadMap:
    """P: I(O) u I(O) -> O, the ends to x and both sigmas to zero"""

    def rule(g: Generator) -> Optional[Element]:
        if g.marker in (Marker.SIGMA0, Marker.SIGMA1):
            return None
        return Element.generator(double.underlying(g))

    return OperadMap("P", double, double.source, rule)
