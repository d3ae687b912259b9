from typing import Dict, List, Optional, Union

from pydantic import BaseModel

from ..core.base.operads import INITIAL, BaseOperad
from ..core.errors import PresentationError, UnknownGeneratorError
from ..core.semantic.evaluator import parse_element
from ..core.terms.element import Element
from ..core.terms.generators import Generator, generator
from .presentation import Presentation

BoundarySource = Union[str, Element]


class GeneratorSpec(BaseModel):
    """One cell generator as written in a presentation file; ranges are checked by the validator"""
    name: str
    arity: int
    degree: int
    stage: int = 0
    boundary: str = "0"


class ExplicitPresentation(Presentation):
    """A presentation with a finite, explicitly listed set of cells"""

    def __init__(self, name: str, base: BaseOperad = INITIAL, specs: Optional[List[GeneratorSpec]] = None):
        super().__init__(name, base)
        self._cells: Dict[str, Generator] = {}
        self._sources: Dict[Generator, BoundarySource] = {}
        for spec in specs or []:
            self.add_generator(spec.name, spec.arity, spec.degree, spec.stage, spec.boundary)

    def add_generator(self, name: str, arity: int, degree: int, stage: int = 0,
                      boundary: BoundarySource = "0") -> Generator:
        if name in self._cells:
            raise PresentationError(f"Generator '{name}' is already defined in '{self.name}'")
        g = generator(name, arity, degree, stage)
        self._cells[name] = g
        self._sources[g] = boundary
        return g

    def generators(self, max_arity: int) -> List[Generator]:
        found = [g for g in self._cells.values() if g.arity <= max_arity]
        return sorted(found, key=lambda g: (g.stage, g.arity, g.name))

    def resolve_cell(self, label: str) -> Generator:
        g = self._cells.get(label)
        if g is None:
            raise UnknownGeneratorError(label, self.name)
        return g

    def compute_boundary(self, g: Generator) -> Element:
        source = self._sources.get(g)
        if source is None:
            raise UnknownGeneratorError(g.label, self.name)
        if isinstance(source, Element):
            return source
        return parse_element(self, source)


class OverriddenPresentation(Presentation):
    """A presentation with some boundaries replaced, sharing the rest"""

    def __init__(self, source: Presentation, overrides: Dict[str, BoundarySource]):
        super().__init__(f"{source.name}*", source.base)
        self.source = source
        self.overrides = dict(overrides)

    def generators(self, max_arity: int) -> List[Generator]:
        return self.source.generators(max_arity)

    def resolve_cell(self, label: str) -> Generator:
        return self.source.resolve_cell(label)

    def compute_boundary(self, g: Generator) -> Element:
        replacement = self.overrides.get(g.label)
        if replacement is None:
            return self.source.boundary(g)
        if isinstance(replacement, Element):
            return replacement
        return parse_element(self, replacement)
