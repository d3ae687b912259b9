"""
Strict units up to homotopy: cells nu_n^S over the unital associative operad.

For a fixed m >= 1, nu_n^S exists for n >= m and every m-element subset
S = {l_1 < ... < l_m} of {1, ..., n}; it has arity n - m, degree n - 2 + m
and stage n - m. Think of S as the positions of n slots filled by units;
the remaining n - m positions are the inputs.
"""

import re
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..core.base.operads import UNIT_NAME, UNITAL_ASSOCIATIVE
from ..core.errors import PresentationError, UnknownGeneratorError
from ..core.terms.composition import compose_at
from ..core.terms.element import Element
from ..core.terms.generators import Generator, Marker, generator
from ..core.terms.signs import sign_power
from ..cylinder.presentation import CylinderPresentation
from ..presentation.explicit import ExplicitPresentation
from ..presentation.morphism import OperadMap
from ..presentation.presentation import Presentation

_LABEL = re.compile(r"^nu_(\d+)\^\{(\d+(?:,\d+)*)\}$")

Subset = Tuple[int, ...]


def nu_name(n: int, subset: Sequence[int]) -> str:
    return f"nu_{n}^{{{','.join(str(l) for l in subset)}}}"


class UnitalPresentation(Presentation):
    """The presentation ``unital-nu:m=k``"""

    def __init__(self, m: int):
        if m < 1:
            raise PresentationError(f"unital-nu needs m >= 1, got {m}")
        super().__init__(f"unital-nu:m={m}", UNITAL_ASSOCIATIVE)
        self.m = m

    def nu(self, n: int, subset: Sequence[int]) -> Generator:
        subset = tuple(subset)
        if n < self.m or len(subset) != self.m or list(subset) != sorted(set(subset)) \
                or subset[0] < 1 or subset[-1] > n:
            raise UnknownGeneratorError(nu_name(n, subset), self.name)
        return generator(nu_name(n, subset), n - self.m, n - 2 + self.m, n - self.m)

    def generators(self, max_arity: int) -> List[Generator]:
        found = []
        for n in range(self.m, self.m + max_arity + 1):
            for subset in combinations(range(1, n + 1), self.m):
                found.append(self.nu(n, subset))
        return sorted(found, key=lambda g: (g.stage, g.arity, g.name))

    def resolve_cell(self, label: str) -> Generator:
        match = _LABEL.match(label)
        if not match:
            raise UnknownGeneratorError(label, self.name)
        n = int(match.group(1))
        subset = tuple(int(l) for l in match.group(2).split(","))
        return self.nu(n, subset)

    @staticmethod
    def parse(g: Generator) -> Tuple[int, Subset]:
        match = _LABEL.match(g.name)
        if not match:
            raise UnknownGeneratorError(g.label)
        return int(match.group(1)), tuple(int(l) for l in match.group(2).split(","))

    def compute_boundary(self, g: Generator) -> Element:
        n, subset = self.parse(g)
        arity, degree = g.arity, g.degree - 1
        mu = Element.generator(self.base.label(2))
        m = self.m

        if m == 1 and n == 1:
            return Element.zero(arity, degree)
        if m == 1 and n == 2:
            slot = 1 if subset == (1,) else 2
            lowest = Element.generator(self.nu(1, (1,)))
            return compose_at(mu, slot, lowest, self.base) - Element.identity()

        parts = []
        if n - 1 >= m:
            if subset[-1] != n:
                lower = Element.generator(self.nu(n - 1, subset))
                parts.append(compose_at(mu, 1, lower, self.base).scale(sign_power(n)))
            if subset[0] != 1:
                lower = Element.generator(self.nu(n - 1, tuple(l - 1 for l in subset)))
                parts.append(compose_at(mu, 2, lower, self.base))
            bounds = (0,) + subset + (n + 1,)
            for v in range(1, m + 2):
                kept = subset[:v - 1]
                shifted = tuple(l - 1 for l in subset[v - 1:])
                for i in range(1, n - m):
                    if bounds[v - 1] < i + v - 1 < bounds[v] - 1:
                        lower = Element.generator(self.nu(n - 1, kept + shifted))
                        parts.append(compose_at(lower, i, mu, self.base).scale(sign_power(i + v - 1)))
        return Element.sum(parts, arity, degree)


def base_presentation(source: UnitalPresentation) -> ExplicitPresentation:
    """O_0, the unital associative operad with no cells"""
    return ExplicitPresentation(source.base.name, source.base)


def _retraction_image(source: UnitalPresentation, g: Generator) -> Optional[Element]:
    n, subset = source.parse(g)
    if source.m == 1 and n == 1:
        return Element.generator(source.base.resolve(UNIT_NAME))
    return None


def unital_retraction(source: UnitalPresentation) -> OperadMap:
    """r: O -> O_0, every nu to zero except nu_1^{1} to u when m = 1"""
    return OperadMap("r", source, base_presentation(source), lambda g: _retraction_image(source, g))


def unital_projection(source: UnitalPresentation) -> OperadMap:
    """j r: O -> O"""
    return OperadMap("jr", source, source, lambda g: _retraction_image(source, g))


def unital_retraction_homotopy(cylinder: CylinderPresentation) -> OperadMap:
    """
    H: I(O) -> O from the identity to j r

    H(i0 nu) = nu, H(i1 nu) = j r(nu) and
    H(sigma nu_n^S) = (-1)^(l_1 + 1) nu_(n+1)^(S+1) o_(l_1) u.
    """
    source = cylinder.source
    if not isinstance(source, UnitalPresentation):
        raise PresentationError(f"H is only defined on the cylinder of a unital-nu presentation, not {source.name}")
    unit = Element.generator(source.base.resolve(UNIT_NAME))

    def rule(g: Generator) -> Optional[Element]:
        x = cylinder.labels.underlying(g)
        if g.marker is Marker.I0:
            return Element.generator(x)
        if g.marker is Marker.I1:
            return _retraction_image(source, x)
        n, subset = source.parse(x)
        first = subset[0]
        raised = Element.generator(source.nu(n + 1, tuple(l + 1 for l in subset)))
        return compose_at(raised, first, unit, source.base).scale(sign_power(first + 1))

    return OperadMap("H", cylinder, source, rule)
