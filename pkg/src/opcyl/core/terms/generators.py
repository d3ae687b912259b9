from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Marker(str, Enum):
    """Cylinder decoration of a label"""
    PLAIN = "plain"
    I0 = "i0"
    I1 = "i1"
    SIGMA = "sigma"
    # the five families of the pasted double cylinder
    BOT = "bot"
    SIGMA0 = "sigma0"
    MID = "mid"
    SIGMA1 = "sigma1"
    TOP = "top"


SIGMA_MARKERS = frozenset({Marker.SIGMA, Marker.SIGMA0, Marker.SIGMA1})
CYLINDER_MARKERS = (Marker.I0, Marker.I1, Marker.SIGMA)
DOUBLE_MARKERS = (Marker.BOT, Marker.SIGMA0, Marker.MID, Marker.SIGMA1, Marker.TOP)
_MARKER_VALUES = {m.value: m for m in Marker if m is not Marker.PLAIN}


class Origin(str, Enum):
    BASE = "base"
    CELL = "cell"


class Generator(BaseModel):
    """A named operation with arity, degree, cell stage and cylinder marker"""
    model_config = ConfigDict(frozen=True)

    name: str
    arity: int = Field(ge=0)
    degree: int
    stage: int = Field(default=0, ge=0)
    marker: Marker = Marker.PLAIN
    origin: Origin = Origin.CELL

    @property
    def label(self) -> str:
        """Label text; markers prefix the name as ``marker:name``"""
        if self.marker is Marker.PLAIN:
            return self.name
        return f"{self.marker.value}:{self.name}"

    @property
    def is_base(self) -> bool:
        return self.origin is Origin.BASE

    @property
    def is_cell(self) -> bool:
        return self.origin is Origin.CELL

    def sort_key(self) -> Tuple[str, int, int]:
        return (self.label, self.arity, self.degree)

    def __str__(self) -> str:
        return self.label


@lru_cache(maxsize=None)
def _intern(name: str, arity: int, degree: int, stage: int, marker: Marker, origin: Origin) -> Generator:
    return Generator(name=name, arity=arity, degree=degree, stage=stage, marker=marker, origin=origin)


def generator(
    name: str,
    arity: int,
    degree: int,
    stage: int = 0,
    marker: Marker = Marker.PLAIN,
    origin: Origin = Origin.CELL,
) -> Generator:
    """Interned generator constructor; equal generators are the same object"""
    return _intern(name, arity, degree, stage, Marker(marker), Origin(origin))


def base_generator(name: str, arity: int, degree: int = 0) -> Generator:
    return generator(name, arity, degree, 0, Marker.PLAIN, Origin.BASE)


def marked(g: Generator, marker: Marker) -> Generator:
    """
    Decorate a cell label; base labels pass through unchanged

    Stage s of the source becomes stage 2s for the end copies and 2s + 1 for
    the sigma copies, so a cylinder is again cellular with boundaries in
    strictly earlier stages.
    """
    if g.is_base or marker is Marker.PLAIN:
        return g
    shift = 1 if marker in SIGMA_MARKERS else 0
    return generator(g.label, g.arity, g.degree + shift, 2 * g.stage + shift, marker, Origin.CELL)


def source_stage(g: Generator) -> int:
    """Stage of the generator a decorated label comes from"""
    if g.is_base:
        return 0
    if g.marker is Marker.PLAIN:
        return g.stage
    return g.stage // 2


def split_marker(label: str) -> Tuple[Optional[Marker], str]:
    """Split the outermost marker prefix off a label text"""
    head, sep, rest = label.partition(":")
    if sep and head in _MARKER_VALUES:
        return _MARKER_VALUES[head], rest
    return None, label
