"""
Presentation files.

A presentation file is JSON or YAML:

    name: my-operad
    base: initial          # initial | assoc | uassoc
    generators:
      - {name: x, arity: 2, degree: 0, stage: 0, boundary: "0"}
      - {name: y, arity: 3, degree: 1, stage: 1, boundary: "x o1 x - x o2 x"}
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Union

import yaml
from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from ..core.base.registry import default_registry
from ..core.errors import PresentationError
from .explicit import ExplicitPresentation, GeneratorSpec

logger = logging.getLogger(__name__)

PRESENTATION_SUFFIXES = (".json", ".yaml", ".yml")


class PresentationDocument(BaseModel):
    """The parsed content of a presentation file"""
    name: str
    base: str = "initial"
    generators: List[GeneratorSpec] = Field(default_factory=list)
    # 1-based source lines of the generator entries, when known
    lines: Dict[int, int] = Field(default_factory=dict, exclude=True)


def looks_like_presentation_file(name: str) -> bool:
    return name.lower().endswith(PRESENTATION_SUFFIXES)


def _generator_lines(text: str) -> Dict[int, int]:
    """Line of each generator entry, read from the YAML node tree"""
    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return {}
    if not isinstance(root, yaml.MappingNode):
        return {}
    for key, value in root.value:
        if key.value == "generators" and isinstance(value, yaml.SequenceNode):
            return {index: item.start_mark.line + 1 for index, item in enumerate(value.value)}
    return {}


def parse_document(text: str, source: str = "<string>") -> PresentationDocument:
    """
    Parse the text of a presentation file

    Raises:
        PresentationError: when the text is not a well-formed presentation document
    """
    try:
        if source.lower().endswith(".json"):
            raw = json.loads(text)
        else:
            raw = yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise PresentationError(f"Cannot read {source}: {exc}") from None
    if not isinstance(raw, dict):
        raise PresentationError(f"{source} must contain a mapping with 'name' and 'generators'")
    try:
        document = PresentationDocument(**raw)
    except PydanticValidationError as exc:
        raise PresentationError(f"Malformed presentation file {source}: {exc}") from None
    document.lines = _generator_lines(text)
    return document


def load_document(path: Union[str, Path]) -> PresentationDocument:
    path = Path(path)
    if not path.is_file():
        raise PresentationError(f"Presentation file not found: {path}")
    logger.debug("Reading presentation file %s", path)
    return parse_document(path.read_text(), str(path))


def build_presentation(document: PresentationDocument) -> ExplicitPresentation:
    base = default_registry.require(document.base)
    return ExplicitPresentation(document.name, base, document.generators)


def load_presentation(path: Union[str, Path], validate: bool = True) -> ExplicitPresentation:
    """
    Read, validate and build a presentation file

    Args:
        path: JSON or YAML file
        validate: run the validator first and refuse files with errors

    Raises:
        PresentationError: for unreadable files and files with validation errors
    """
    document = load_document(path)
    if validate:
        from .validator import Validator

        errors = [e for e in Validator().validate(document) if e.severity == "error"]
        if errors:
            first = errors[0]
            raise PresentationError(f"{path}, line {first.line}: {first.message}")
    return build_presentation(document)

