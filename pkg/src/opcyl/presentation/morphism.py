"""Operad maps between presentations, given on generators"""

import logging
from typing import Callable, Dict, Optional

from pydantic import BaseModel

from ..core.terms.element import Element
from ..core.terms.generators import Generator
from ..core.terms.maps import apply_operad_map
from ..core.terms.render import render_element
from .presentation import Presentation

logger = logging.getLogger(__name__)

GeneratorRule = Callable[[Generator], Optional[Element]]


class ChainMapReport(BaseModel):
    """Outcome of checking that an operad map commutes with differentials"""
    name: str
    checked: int
    success: bool
    failing_generator: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None


class OperadMap:
    """
    Degree-0 operad map f: source -> target defined on cell generators

    Base labels are sent to themselves; the rule returns None for generators
    sent to zero.
    """

    def __init__(self, name: str, source: Presentation, target: Presentation, rule: GeneratorRule):
        self.name = name
        self.source = source
        self.target = target
        self.rule = rule
        self._images: Dict[Generator, Optional[Element]] = {}

    def on_generator(self, g: Generator) -> Optional[Element]:
        if g not in self._images:
            image = Element.generator(g) if g.is_base else self.rule(g)
            if image is not None and image.is_zero():
                image = None
            self._images[g] = image
        return self._images[g]

    def __call__(self, e: Element) -> Element:
        return apply_operad_map(e, self.on_generator, self.target.base, e.degree)

    def check_chain_map(self, max_arity: int) -> ChainMapReport:
        """Check d f(g) = f(d g) on every source generator within the bound"""
        checked = 0
        for g in self.source.generators(max_arity):
            checked += 1
            image = self.on_generator(g)
            lhs = self.target.differential(image) if image is not None else Element.zero()
            rhs = self(self.source.boundary(g))
            if lhs != rhs:
                logger.info("%s fails to commute with d on %s", self.name, g.label)
                return ChainMapReport(name=self.name, checked=checked, success=False,
                                      failing_generator=g.label,
                                      lhs=render_element(lhs), rhs=render_element(rhs))
        return ChainMapReport(name=self.name, checked=checked, success=True)

    def __repr__(self) -> str:
        return f"OperadMap({self.name}: {self.source.name} -> {self.target.name})"
