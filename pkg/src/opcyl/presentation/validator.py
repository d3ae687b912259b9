import logging
from typing import Dict, List, Set

from pydantic import BaseModel

from ..core.base.operads import BaseOperad
from ..core.base.registry import default_registry
from ..core.errors import OperadError
from ..core.semantic.evaluator import parse_element
from .explicit import ExplicitPresentation, GeneratorSpec
from .loader import PresentationDocument

logger = logging.getLogger(__name__)


class ValidationError(BaseModel):
    """Represents a validation error"""
    message: str
    line: int
    column: int
    severity: str = "error"  # "error", "warning", "info"


class Validator:
    """Validator for presentation files"""

    def __init__(self):
        self.errors: List[ValidationError] = []
        self._lines: Dict[int, int] = {}

    def validate(self, document: PresentationDocument) -> List[ValidationError]:
        """Validate a presentation document; boundaries are parsed against the document itself"""
        self.errors = []
        self._lines = document.lines

        base = default_registry.get(document.base)
        if base is None:
            self.add_error(f"Unknown base operad '{document.base}'", 1)
            return self.errors
        if not document.generators:
            self.add_error("Presentation has no generators", 1, "warning")

        kept: List[int] = []
        seen: Set[str] = set()
        for index, spec in enumerate(document.generators):
            if self._validate_header(index, spec, seen, base):
                kept.append(index)
            seen.add(spec.name)

        accepted = [document.generators[index] for index in kept]
        presentation = ExplicitPresentation(document.name, base, accepted)
        for index in kept:
            self._validate_boundary(index, document.generators[index], presentation)

        self._validate_stages(accepted)
        logger.debug("Validated %s: %d issue(s)", document.name, len(self.errors))
        return self.errors

    def add_error(self, message: str, line: int, severity: str = "error") -> None:
        self.errors.append(ValidationError(message=message, line=line, column=1, severity=severity))

    def _line(self, index: int) -> int:
        return self._lines.get(index, index + 1)

    def _validate_header(self, index: int, spec: GeneratorSpec, seen: Set[str], base: BaseOperad) -> bool:
        line = self._line(index)
        ok = True
        if spec.name in seen:
            self.add_error(f"Duplicate generator name '{spec.name}'", line)
            ok = False
        if spec.arity < 0:
            self.add_error(f"Generator '{spec.name}' has negative arity {spec.arity}", line)
            ok = False
        if spec.stage < 0:
            self.add_error(f"Generator '{spec.name}' has negative stage {spec.stage}", line)
            ok = False
        if spec.name == "id" or ":" in spec.name or base.resolve(spec.name) is not None:
            self.add_error(f"'{spec.name}' is not a valid generator name", line)
            ok = False
        return ok

    def _validate_boundary(self, index: int, spec: GeneratorSpec, presentation: ExplicitPresentation) -> None:
        line = self._line(index)
        try:
            boundary = parse_element(presentation, spec.boundary)
        except OperadError as exc:
            self.add_error(f"Boundary of '{spec.name}': {exc}", line)
            return
        if boundary.is_zero():
            return
        if boundary.arity != spec.arity:
            self.add_error(f"Boundary of '{spec.name}' has arity {boundary.arity}, expected {spec.arity}", line)
        if boundary.degree != spec.degree - 1:
            self.add_error(
                f"Boundary of '{spec.name}' has degree {boundary.degree}, expected {spec.degree - 1}", line
            )
        late = sorted({
            tok.name for mono in boundary.terms for tok in mono.tokens
            if tok is not None and tok.is_cell and tok.stage >= spec.stage
        })
        for name in late:
            self.add_error(
                f"Boundary of '{spec.name}' (stage {spec.stage}) uses '{name}' from the same or a later stage", line
            )

    def _validate_stages(self, specs: List[GeneratorSpec]) -> None:
        stages = {spec.stage for spec in specs}
        if not stages:
            return
        for stage in range(max(stages)):
            if stage not in stages:
                self.add_error(f"Stage {stage} has no generators", 1, "warning")
