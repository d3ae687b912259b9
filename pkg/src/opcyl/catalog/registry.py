"""
Named presentations.

``build`` understands the built-in names, ``unital-nu:m=<k>``, the wrappers
``cyl:<name>`` and ``dcyl:<name>`` (nested freely) and paths to presentation
files.
"""

import logging
import re
from typing import Callable, Dict, List, Optional, Tuple

from ..config import EngineSettings, get_settings
from ..core.errors import PresentationError
from ..cylinder.linear import DoubleCylinderPresentation
from ..cylinder.presentation import CylinderPresentation
from ..presentation.loader import load_presentation, looks_like_presentation_file
from ..presentation.presentation import Presentation
from ..suspension.operadic import SuspendedPresentation
from .ainf import AInfinityPresentation, AssociativeDerivationPresentation
from .unital import UnitalPresentation

logger = logging.getLogger(__name__)

CYLINDER_PREFIX = "cyl:"
DOUBLE_PREFIX = "dcyl:"

_UNITAL = re.compile(r"^unital-nu:m=(\d+)$")

Builder = Callable[[], Presentation]


class PresentationCatalog:
    """Registry of the built-in presentations"""

    def __init__(self):
        self._builders: Dict[str, Tuple[Builder, str]] = {}
        self._initialize_builtin_presentations()

    def _initialize_builtin_presentations(self):
        """Initialize the catalog with the built-in presentations"""
        self.register("ainf", AInfinityPresentation, "A-infinity, mu_n of degree n - 2")
        self.register("lambda-ainf", lambda: AInfinityPresentation(suspended=True),
                      "suspended A-infinity, d(mu_n) = sum mu_p{mu_q}")
        self.register("ainf-d", lambda: AInfinityPresentation(with_derivation=True),
                      "A-infinity with a homotopy derivation D_n")
        self.register("lambda-ainf-d", lambda: AInfinityPresentation(suspended=True, with_derivation=True),
                      "suspended A-infinity with a homotopy derivation")
        self.register("assoc-der", AssociativeDerivationPresentation,
                      "associative base with a homotopy derivation D_n")

    def register(self, name: str, builder: Builder, description: str = "") -> None:
        """Register a presentation builder under a name"""
        if name in self._builders:
            raise ValueError(f"Presentation '{name}' is already registered")
        self._builders[name] = (builder, description)

    def exists(self, name: str) -> bool:
        return name in self._builders or _UNITAL.match(name) is not None

    def describe(self) -> List[Tuple[str, str]]:
        rows = [(name, description) for name, (_, description) in self._builders.items()]
        rows.append(("unital-nu:m=<k>", "strict units up to homotopy, cells nu_n^S with |S| = k"))
        rows.append(("cyl:<name>", "the canonical strong cylinder of <name>"))
        rows.append(("dcyl:<name>", "the pasted double cylinder of a linear <name>"))
        return rows

    def build(self, name: str, suspended: bool = False, settings: Optional[EngineSettings] = None) -> Presentation:
        """
        Build a presentation by name

        Args:
            name: a built-in name, a ``cyl:``/``dcyl:`` wrapper or a presentation file path
            suspended: apply the operadic suspension to the innermost presentation
            settings: engine settings for any cylinders built on the way

        Raises:
            PresentationError: for unknown names
        """
        settings = settings or get_settings()
        if name.startswith(CYLINDER_PREFIX):
            inner = self.build(name[len(CYLINDER_PREFIX):], suspended, settings)
            return CylinderPresentation(inner, settings)
        if name.startswith(DOUBLE_PREFIX):
            inner = self.build(name[len(DOUBLE_PREFIX):], suspended, settings)
            return DoubleCylinderPresentation(inner)

        presentation = self._build_innermost(name)
        if suspended:
            presentation = SuspendedPresentation(presentation)
        logger.debug("Built presentation %s", presentation.name)
        return presentation

    def _build_innermost(self, name: str) -> Presentation:
        entry = self._builders.get(name)
        if entry is not None:
            return entry[0]()
        match = _UNITAL.match(name)
        if match:
            return UnitalPresentation(int(match.group(1)))
        if looks_like_presentation_file(name):
            return load_presentation(name)
        known = ", ".join(sorted(self._builders))
        raise PresentationError(f"Unknown presentation '{name}' (known: {known}, unital-nu:m=<k>, or a file)")


# Global presentation catalog instance
default_catalog = PresentationCatalog()


def build(name: str, suspended: bool = False, settings: Optional[EngineSettings] = None) -> Presentation:
    return default_catalog.build(name, suspended, settings)
