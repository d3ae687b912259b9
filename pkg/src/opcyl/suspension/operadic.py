"""
Operadic suspension.

The suspension keeps every operation and regrades it by 1 - arity; its
compositions pick up the sign (-1)^(||y|| (p - i) + |y| (i - 1)). Elements
are transported monomial by monomial: each tree is rebuilt from its root
corolla by grafting the child subtrees from the last slot to the first, in
both gradings, and the grafting signs of the two worlds are compared.
"""

import logging
from typing import Dict, List, Optional, Tuple

from ..core.errors import OperadError
from ..core.terms.composition import compose_monomials_at
from ..core.terms.element import Element, accumulate
from ..core.terms.generators import Generator, generator
from ..core.terms.monomial import Monomial
from ..core.terms.signs import sign_power
from ..core.trees.planar import child_positions
from ..presentation.presentation import Presentation

logger = logging.getLogger(__name__)


def suspended_degree(g: Generator) -> int:
    return g.degree + 1 - g.arity


def shift_generator(g: Generator, direction: int) -> Generator:
    """Regrade one label; direction +1 suspends, -1 desuspends"""
    degree = g.degree + direction * (1 - g.arity)
    return generator(g.name, g.arity, degree, g.stage, g.marker, g.origin)


def suspend_generator(g: Generator) -> Generator:
    return shift_generator(g, 1)


def desuspend_generator(g: Generator) -> Generator:
    return shift_generator(g, -1)


def _transport(mono: Monomial, direction: int) -> Tuple[int, Monomial]:
    """
    (sign, image) with the image of ``mono`` equal to sign * image

    The grafting x o_i y in the source grading corresponds to
    (-1)^(||y|| (P - i) + |y| (i - 1)) times the same grafting in the
    suspended grading, ||.|| and |.| being the suspended and plain degrees
    and P the arity of x.
    """
    code = mono.code
    tokens = mono.tokens

    def walk(pos: int) -> Tuple[int, int, Monomial, Monomial]:
        # returns (source sign, target sign, source monomial, target monomial)
        tok = tokens[pos]
        if tok is None:
            return 1, 1, Monomial.identity(), Monomial.identity()
        src = Monomial.corolla(tok)
        dst = Monomial.corolla(shift_generator(tok, direction))
        src_sign = dst_sign = 1
        for i, child in reversed(list(enumerate(child_positions(code, pos), start=1))):
            if tokens[child] is None:
                continue
            c_src_sign, c_dst_sign, c_src, c_dst = walk(child)
            arity = src.arity
            if direction > 0:
                plain, suspended = c_src.degree, c_dst.degree
            else:
                plain, suspended = c_dst.degree, c_src.degree
            bullet = sign_power(suspended * (arity - i) + plain * (i - 1))
            s, src = compose_monomials_at(src, i, c_src)
            t, dst = compose_monomials_at(dst, i, c_dst)
            src_sign *= s * c_src_sign
            dst_sign *= t * c_dst_sign * bullet
        return src_sign, dst_sign, src, dst

    src_sign, dst_sign, src, dst = walk(0)
    if src != mono:
        raise OperadError("Suspension rebuilt a different tree")
    return src_sign * dst_sign, dst


def _transport_element(e: Element, direction: int) -> Element:
    terms: Dict[Monomial, int] = {}
    for mono, coeff in e.terms.items():
        sign, image = _transport(mono, direction)
        accumulate(terms, image, sign * coeff)
    degree = None
    if e.degree is not None and e.arity is not None:
        degree = e.degree + direction * (1 - e.arity)
    return Element(terms, e.arity, degree)


def suspend_element(e: Element) -> Element:
    """Lambda on elements; a strict isomorphism onto the suspended alphabet"""
    return _transport_element(e, 1)


def desuspend_element(e: Element) -> Element:
    return _transport_element(e, -1)


class SuspendedPresentation(Presentation):
    """Lambda of a presentation: regraded generators, transported boundaries"""

    def __init__(self, source: Presentation, name: Optional[str] = None):
        super().__init__(name or f"lambda-{source.name}", source.base.suspended())
        self.source = source
        logger.debug("Built suspension of %s", source.name)

    def generators(self, max_arity: int) -> List[Generator]:
        return [suspend_generator(g) for g in self.source.generators(max_arity)]

    def resolve_cell(self, label: str) -> Generator:
        return suspend_generator(self.source.resolve_cell(label))

    def compute_boundary(self, g: Generator) -> Element:
        return suspend_element(self.source.boundary(desuspend_generator(g)))


def suspend_presentation(source: Presentation) -> SuspendedPresentation:
    return SuspendedPresentation(source)
