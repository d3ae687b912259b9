"""
Pseudo-cellular presentations.

A presentation is a base operad plus a stage-indexed family of cell
generators, each with a boundary over the base and strictly earlier stages.
Infinite families are produced on demand up to an arity bound.
"""

import logging
import threading
from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from ..core.base.operads import BaseOperad
from ..core.errors import PresentationError, UnknownGeneratorError
from ..core.terms.element import Element, accumulate
from ..core.terms.generators import Generator
from ..core.terms.maps import apply_derivation
from ..core.terms.monomial import Monomial
from ..core.terms.render import render_element

logger = logging.getLogger(__name__)


class DSquaredReport(BaseModel):
    """Outcome of checking that the differential squares to zero"""
    presentation: str
    checked: int
    success: bool
    failing_generator: Optional[str] = None
    residue: Optional[str] = None
    message: str = ""


class LinearParts(BaseModel):
    """Split of a boundary by the number of cell-labeled vertices"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    d0: Element
    d1: Element
    rest: Element


def cell_count(mono: Monomial) -> int:
    return sum(1 for tok in mono.tokens if tok is not None and tok.is_cell)


def min_stage(mono: Monomial) -> int:
    """Smallest stage index beta with the monomial in the beta-th operad of the filtration"""
    stages = [tok.stage for tok in mono.tokens if tok is not None and tok.is_cell]
    return 1 + max(stages) if stages else 0


class Presentation(ABC):
    """A relatively pseudo-cellular DG-operad"""

    def __init__(self, name: str, base: BaseOperad):
        self.name = name
        self.base = base
        self._boundaries: Dict[Generator, Element] = {}
        self._lock = threading.Lock()

    @abstractmethod
    def generators(self, max_arity: int) -> List[Generator]:
        """
        Cell generators up to an arity bound

        Args:
            max_arity: largest arity to produce

        Returns:
            Generators ordered by stage, then arity, then label
        """
        pass

    @abstractmethod
    def resolve_cell(self, label: str) -> Generator:
        """
        Cell generator by label text

        Raises:
            UnknownGeneratorError: when no cell has this label
        """
        pass

    @abstractmethod
    def compute_boundary(self, g: Generator) -> Element:
        """
        Boundary of a cell generator, uncached

        Args:
            g: a cell generator of this presentation

        Returns:
            An element of degree |g| - 1 and arity arity(g)
        """
        pass

    def resolve(self, label: str) -> Generator:
        found = self.base.resolve(label)
        if found is not None:
            return found
        return self.resolve_cell(label)

    def owns(self, g: Generator) -> bool:
        if g.is_base:
            return self.base.resolve(g.name) == g
        try:
            return self.resolve_cell(g.label) == g
        except UnknownGeneratorError:
            return False

    def boundary(self, g: Generator) -> Element:
        if g.is_base:
            return Element.zero(g.arity, g.degree - 1)
        cached = self._boundaries.get(g)
        if cached is not None:
            return cached
        value = self.compute_boundary(g)
        if not value.is_zero() and (value.arity != g.arity or value.degree != g.degree - 1):
            raise PresentationError(
                f"Boundary of {g.label} has arity {value.arity} and degree {value.degree}, "
                f"expected {g.arity} and {g.degree - 1}"
            )
        value = Element(value.terms, g.arity, g.degree - 1)
        with self._lock:
            return self._boundaries.setdefault(g, value)

    def _boundary_image(self, g: Generator) -> Optional[Element]:
        if g.is_base:
            return None
        value = self.boundary(g)
        return None if value.is_zero() else value

    def differential(self, e: Element) -> Element:
        """The derivation extending the boundary map, zero on base labels"""
        return apply_derivation(e, self._boundary_image, -1, self.base)

    def stages(self, max_arity: int) -> Dict[int, List[Generator]]:
        grouped: Dict[int, List[Generator]] = {}
        for g in self.generators(max_arity):
            grouped.setdefault(g.stage, []).append(g)
        return grouped

    def check_d_squared(self, max_arity: int, max_stage: Optional[int] = None) -> DSquaredReport:
        """Check d(d(x)) = 0 and the stage condition on every generator within bounds"""
        checked = 0
        for g in self.generators(max_arity):
            if max_stage is not None and g.stage > max_stage:
                continue
            checked += 1
            boundary = self.boundary(g)
            late = [
                tok.label for mono in boundary.terms for tok in mono.tokens
                if tok is not None and tok.is_cell and tok.stage >= g.stage
            ]
            if late:
                return DSquaredReport(
                    presentation=self.name, checked=checked, success=False, failing_generator=g.label,
                    residue=render_element(boundary),
                    message=f"Boundary of {g.label} uses {late[0]} outside the earlier stages",
                )
            residue = self.differential(boundary)
            if not residue.is_zero():
                logger.info("d^2 fails on %s in %s", g.label, self.name)
                return DSquaredReport(
                    presentation=self.name, checked=checked, success=False, failing_generator=g.label,
                    residue=render_element(residue), message=f"d(d({g.label})) is not zero",
                )
        return DSquaredReport(presentation=self.name, checked=checked, success=True,
                              message=f"d^2 = 0 on {checked} generators")

    def linear_parts(self, g: Generator) -> LinearParts:
        parts: List[Dict[Monomial, int]] = [{}, {}, {}]
        for mono, coeff in self.boundary(g).terms.items():
            accumulate(parts[min(cell_count(mono), 2)], mono, coeff)
        arity, degree = g.arity, g.degree - 1
        return LinearParts(
            d0=Element(parts[0], arity, degree),
            d1=Element(parts[1], arity, degree),
            rest=Element(parts[2], arity, degree),
        )

    def is_linear(self, max_arity: int) -> bool:
        return all(self.linear_parts(g).rest.is_zero() for g in self.generators(max_arity))

    def is_strictly_linear(self, max_arity: int) -> bool:
        return all(
            parts.rest.is_zero() and parts.d0.is_zero()
            for parts in (self.linear_parts(g) for g in self.generators(max_arity))
        )

    def with_overrides(self, overrides: Dict[str, Element]) -> "Presentation":
        """Copy of this presentation with some boundaries replaced"""
        from .explicit import OverriddenPresentation
        return OverriddenPresentation(self, overrides)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"
