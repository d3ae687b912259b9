"""Label-level cylinder data: i0, i1, sigma, p, i0 p and h_I on generators"""

import threading
from typing import Callable, Dict, Optional

from ..core.terms.element import Element, accumulate
from ..core.terms.generators import CYLINDER_MARKERS, Generator, Marker, marked
from ..core.terms.monomial import relabel
from ..presentation.presentation import Presentation

LabelRule = Callable[[Generator], Optional[Generator]]


def relabel_element(e: Element, rule: LabelRule) -> Element:
    """Apply a degree-preserving label map monomial by monomial"""
    terms: Dict = {}
    for mono, coeff in e.terms.items():
        image = relabel(mono, rule)
        if image is not None:
            accumulate(terms, image, coeff)
    return Element(terms, e.arity, e.degree)


class CylinderLabels:
    """Cylinder decorations of the labels of a source presentation"""

    def __init__(self, source: Presentation):
        self.source = source
        self._underlying: Dict[Generator, Generator] = {}
        self._lock = threading.Lock()

    def is_cylinder_label(self, g: Generator) -> bool:
        return g.is_cell and g.marker in CYLINDER_MARKERS

    def underlying(self, g: Generator) -> Generator:
        """The source generator a cylinder label decorates"""
        if g.is_base:
            return g
        found = self._underlying.get(g)
        if found is None:
            found = self.source.resolve(g.name)
            with self._lock:
                self._underlying[g] = found
        return found

    def i0_label(self, x: Generator) -> Generator:
        return marked(x, Marker.I0)

    def i1_label(self, x: Generator) -> Generator:
        return marked(x, Marker.I1)

    def sigma_label(self, x: Generator) -> Generator:
        return marked(x, Marker.SIGMA)

    def p_label(self, g: Generator) -> Optional[Generator]:
        if g.is_base:
            return g
        if g.marker is Marker.SIGMA:
            return None
        return self.underlying(g)

    def i0p_label(self, g: Generator) -> Optional[Generator]:
        if g.is_base or g.marker is Marker.I0:
            return g
        if g.marker is Marker.SIGMA:
            return None
        return self.i0_label(self.underlying(g))

    def h_label(self, g: Generator) -> Optional[Generator]:
        """h_I: i1(x) to sigma(x), everything else to zero"""
        if g.is_cell and g.marker is Marker.I1:
            return self.sigma_label(self.underlying(g))
        return None

    def i0_map(self, e: Element) -> Element:
        return relabel_element(e, self.i0_label)

    def i1_map(self, e: Element) -> Element:
        return relabel_element(e, self.i1_label)

    def p_map(self, e: Element) -> Element:
        return relabel_element(e, self.p_label)

    def i0p_map(self, e: Element) -> Element:
        return relabel_element(e, self.i0p_label)
