"""Operad maps and derivations defined on labels, extended to elements"""

from itertools import product
from typing import Callable, Dict, List, Optional

from ..base.operads import INITIAL, BaseOperad
from .element import Element, accumulate
from .generators import Generator
from .monomial import Monomial, assemble, splice
from .signs import sign_power

LabelImage = Callable[[Generator], Optional[Element]]


def apply_operad_map(e: Element, image: LabelImage, base: Optional[BaseOperad] = None,
                     degree: Optional[int] = None) -> Element:
    """
    Extend a degree-0 label map to an operad map

    Args:
        e: the element to map
        image: label -> Element of the same arity and degree; None means zero
        base: base operad of the target, used to normalize
        degree: degree of the result when it is zero
    """
    base = base if base is not None else INITIAL
    cache: Dict[Generator, List] = {}

    def terms_of(g: Generator) -> List:
        if g not in cache:
            value = image(g)
            cache[g] = [] if value is None else list(value.terms.items())
        return cache[g]

    terms: Dict[Monomial, int] = {}
    for mono, coeff in e.terms.items():
        skeleton: List[Optional[int]] = []
        choices = []
        for tok in mono.tokens:
            if tok is None:
                skeleton.append(None)
            else:
                skeleton.append(len(choices))
                choices.append(terms_of(tok))
        if any(not c for c in choices):
            continue
        for combo in product(*choices):
            c = coeff
            for _, k in combo:
                c *= k
            sign, out = assemble(skeleton, [m for m, _ in combo])
            normal_sign, out = base.normalize(out)
            accumulate(terms, out, sign * normal_sign * c)
    return Element(terms, e.arity, e.degree if degree is None else degree)


def apply_derivation(e: Element, image: LabelImage, degree: int,
                     base: Optional[BaseOperad] = None) -> Element:
    """
    Extend a label map of the given degree to a derivation

    On a monomial the derivation is the signed sum over labeled vertices of the
    monomial with that label replaced by its image; moving the operator past the
    labels before it in path order costs (-1) ** (degree * their degrees).
    """
    base = base if base is not None else INITIAL
    cache: Dict[Generator, List] = {}

    def terms_of(g: Generator) -> List:
        if g not in cache:
            value = image(g)
            cache[g] = [] if value is None else list(value.terms.items())
        return cache[g]

    terms: Dict[Monomial, int] = {}
    for mono, coeff in e.terms.items():
        passed = 0
        for pos, tok in enumerate(mono.tokens):
            if tok is None:
                continue
            images = terms_of(tok)
            if images:
                sign = sign_power(degree * passed)
                for block, k in images:
                    splice_sign, out = splice(mono, pos, block)
                    normal_sign, out = base.normalize(out)
                    accumulate(terms, out, coeff * sign * k * splice_sign * normal_sign)
            passed += tok.degree
    result_degree = None if e.degree is None else e.degree + degree
    return Element(terms, e.arity, result_degree)
