"""Operadic compositions, full compositions and braces on elements"""

from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from ..base.operads import INITIAL, BaseOperad
from ..errors import ArityError
from .element import Element, accumulate
from .monomial import Monomial, assemble


def _pick(base: Optional[BaseOperad]) -> BaseOperad:
    return base if base is not None else INITIAL


def _total(values: Sequence[Optional[int]]) -> Optional[int]:
    if any(v is None for v in values):
        return None
    return sum(values)  # type: ignore[arg-type]


def compose_monomials_at(x: Monomial, i: int, y: Monomial, base: Optional[BaseOperad] = None) -> Tuple[int, Monomial]:
    """Graft ``y`` into the i-th leaf of ``x``; returns (sign, normal monomial)"""
    if not 1 <= i <= x.arity:
        raise ArityError(f"Slot {i} out of range 1..{x.arity}")
    skeleton: List[Optional[int]] = [0]
    skeleton.extend([None] * (i - 1))
    skeleton.append(1)
    skeleton.extend([None] * y.arity)
    skeleton.extend([None] * (x.arity - i))
    sign, mono = assemble(skeleton, (x, y))
    normal_sign, mono = _pick(base).normalize(mono)
    return sign * normal_sign, mono


def compose_monomials_full(x0: Monomial, args: Sequence[Monomial],
                           base: Optional[BaseOperad] = None) -> Tuple[int, Monomial]:
    """Simultaneous graft x0(x1, ..., xn); the tensor x0 (x) x1 (x) ... is carried to path order"""
    if len(args) != x0.arity:
        raise ArityError(f"Full composition needs {x0.arity} arguments, got {len(args)}")
    skeleton: List[Optional[int]] = [0]
    for j, arg in enumerate(args, start=1):
        skeleton.append(j)
        skeleton.extend([None] * arg.arity)
    sign, mono = assemble(skeleton, [x0, *args])
    normal_sign, mono = _pick(base).normalize(mono)
    return sign * normal_sign, mono


def compose_at(x: Element, i: int, y: Element, base: Optional[BaseOperad] = None) -> Element:
    """Bilinear partial composition ``x o_i y``"""
    if x.arity is not None and not 1 <= i <= x.arity:
        raise ArityError(f"Slot {i} out of range 1..{x.arity}")
    arity = None if x.arity is None or y.arity is None else x.arity + y.arity - 1
    degree = _total([x.degree, y.degree])
    terms: Dict[Monomial, int] = {}
    for xm, xc in x.terms.items():
        for ym, yc in y.terms.items():
            sign, mono = compose_monomials_at(xm, i, ym, base)
            accumulate(terms, mono, sign * xc * yc)
    return Element(terms, arity, degree)


def compose_full(x0: Element, args: Sequence[Element], base: Optional[BaseOperad] = None) -> Element:
    """Multilinear full composition ``x0(x1, ..., xn)``"""
    if x0.arity is not None and len(args) != x0.arity:
        raise ArityError(f"Full composition needs {x0.arity} arguments, got {len(args)}")
    arity = _total([a.arity for a in args])
    degree = _total([x0.degree] + [a.degree for a in args])
    terms: Dict[Monomial, int] = {}
    if x0.is_zero() or any(a.is_zero() for a in args):
        return Element(terms, arity, degree)
    arg_terms = [list(a.terms.items()) for a in args]
    for x0m, c0 in x0.terms.items():
        for combo in product(*arg_terms):
            coeff = c0
            for _, c in combo:
                coeff *= c
            sign, mono = compose_monomials_full(x0m, [m for m, _ in combo], base)
            accumulate(terms, mono, sign * coeff)
    return Element(terms, arity, degree)


def brace(x0: Element, args: Sequence[Element], base: Optional[BaseOperad] = None) -> Element:
    """Brace ``x0{x1, ..., xn}``: all order-preserving insertions of the arguments"""
    n = len(args)
    if n == 0:
        return x0
    arity = None
    if x0.arity is not None:
        inner = _total([a.arity for a in args])
        arity = None if inner is None else x0.arity - n + inner
    degree = _total([x0.degree] + [a.degree for a in args])
    if x0.is_zero() or x0.arity is None or n > x0.arity:
        return Element.zero(arity, degree)
    identity = Element.identity()
    parts = []
    for slots in combinations(range(x0.arity), n):
        full = [identity] * x0.arity
        for arg, slot in zip(args, slots):
            full[slot] = arg
        parts.append(compose_full(x0, full, base))
    return Element.sum(parts, arity, degree)
