"""
The canonical strong cylinder I(O) of a pseudo-cellular presentation.

Every cell x of the source contributes i0(x), i1(x) and sigma(x); the base
operad is shared and carries the trivial cylinder, so base labels pass
through i0, i1 and p and are killed by h.
"""

import logging
from typing import List, Optional

from ..config import EngineSettings
from ..core.errors import UnknownGeneratorError
from ..core.terms.element import Element
from ..core.terms.generators import CYLINDER_MARKERS, Generator, Marker, marked, split_marker
from ..core.terms.monomial import Monomial
from ..core.trees.planar import child_positions
from ..presentation.morphism import OperadMap
from ..presentation.presentation import Presentation
from .labels import CylinderLabels
from .sdr import CylinderHomotopy

logger = logging.getLogger(__name__)


class CylinderPresentation(Presentation):
    """I(O) as a presentation in its own right, so it can be checked and nested"""

    def __init__(self, source: Presentation, settings: Optional[EngineSettings] = None):
        super().__init__(f"cyl:{source.name}", source.base)
        self.source = source
        self.labels = CylinderLabels(source)
        self.engine = CylinderHomotopy(self.labels, settings)
        logger.debug("Built cylinder of %s", source.name)

    def generators(self, max_arity: int) -> List[Generator]:
        found = []
        for x in self.source.generators(max_arity):
            found.extend(
                [self.labels.i0_label(x), self.labels.i1_label(x), self.labels.sigma_label(x)]
            )
        return sorted(found, key=lambda g: (g.stage, g.arity, g.label))

    def resolve_cell(self, label: str) -> Generator:
        marker, rest = split_marker(label)
        if marker not in CYLINDER_MARKERS:
            raise UnknownGeneratorError(label, self.name)
        x = self.source.resolve(rest)
        if x.is_base:
            raise UnknownGeneratorError(label, self.name)
        return marked(x, marker)

    def compute_boundary(self, g: Generator) -> Element:
        x = self.labels.underlying(g)
        boundary = self.source.boundary(x)
        if g.marker is Marker.I0:
            return self.labels.i0_map(boundary)
        if g.marker is Marker.I1:
            return self.labels.i1_map(boundary)
        ends = Element.generator(self.labels.i0_label(x)) - Element.generator(self.labels.i1_label(x))
        return ends - self.engine.sigma_correction(x)

    def cylinder_differential(self, g: Generator) -> Element:
        return self.boundary(g)

    # homotopy entry points

    def homotopy(self, e: Element) -> Element:
        return self.engine.homotopy(e)

    def cylinder_homotopy(self, stage: int, e: Element) -> Element:
        return self.engine.cylinder_homotopy(stage, e)

    def tensor_homotopy(self, stage: int, mono: Monomial) -> Element:
        return self.engine.tensor_homotopy(stage, mono)

    def perturbation_extension(self, stage: int, e: Element) -> Element:
        return self.engine.perturbation_extension(stage, e)

    # structure maps

    def i0_map(self, e: Element) -> Element:
        return self.labels.i0_map(e)

    def i1_map(self, e: Element) -> Element:
        return self.labels.i1_map(e)

    def p_map(self, e: Element) -> Element:
        return self.labels.p_map(e)

    def structure_maps(self) -> List[OperadMap]:
        """i0, i1: O -> I(O) and p: I(O) -> O as operad maps, for chain map checks"""
        labels = self.labels

        def project(g: Generator) -> Optional[Element]:
            image = labels.p_label(g)
            return None if image is None else Element.generator(image)

        return [
            OperadMap("i0", self.source, self, lambda x: Element.generator(labels.i0_label(x))),
            OperadMap("i1", self.source, self, lambda x: Element.generator(labels.i1_label(x))),
            OperadMap("p", self, self.source, project),
        ]


def is_standard(mono: Monomial) -> bool:
    """Every label is i0(x), i1(x) or sigma(x)"""
    return all(tok.is_cell and tok.marker in CYLINDER_MARKERS for tok in mono.generators)


def has_forbidden_edge(mono: Monomial) -> bool:
    """An inner edge with bottom label i0(y) and top label i1(z)"""
    code = mono.code
    tokens = mono.tokens
    for pos, tok in enumerate(tokens):
        if tok is None or tok.marker is not Marker.I0:
            continue
        for child in child_positions(code, pos):
            above = tokens[child]
            if above is not None and above.marker is Marker.I1:
                return True
    return False


def bottom_label_kind(mono: Monomial) -> Optional[Marker]:
    """Marker of the root vertex label, None for the identity"""
    root = mono.tokens[0]
    return None if root is None else root.marker
