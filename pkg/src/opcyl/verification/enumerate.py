"""Monomial bases and random monomials for the verification suites"""

import random
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..catalog.formulas import chain_element
from ..core.base.operads import INITIAL, BaseOperad
from ..core.terms.composition import compose_monomials_at
from ..core.terms.element import Element
from ..core.terms.generators import CYLINDER_MARKERS, Generator, marked
from ..core.terms.monomial import Monomial, Token
from ..presentation.explicit import ExplicitPresentation
from ..presentation.presentation import Presentation


def _splits(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of ``parts`` nonnegative integers summing to ``total``"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


def monomials(labels: Sequence[Generator], max_vertices: int, max_arity: int,
              min_vertices: int = 1) -> List[Monomial]:
    """
    Every tree labeled from ``labels`` with between ``min_vertices`` and
    ``max_vertices`` inner vertices and at most ``max_arity`` leaves

    No normalization happens here: with base labels in the alphabet the
    caller must normalize.
    """
    labels = tuple(labels)

    @lru_cache(maxsize=None)
    def exact(vertices: int) -> Tuple[Tuple[Token, ...], ...]:
        if vertices == 0:
            return ((None,),)
        found = []
        for g in labels:
            for split in _splits(vertices - 1, g.arity):
                for children in product(*(exact(v) for v in split)):
                    tokens: List[Token] = [g]
                    for child in children:
                        tokens.extend(child)
                    found.append(tuple(tokens))
        return tuple(found)

    result = []
    for vertices in range(min_vertices, max_vertices + 1):
        for tokens in exact(vertices):
            mono = Monomial(tokens)
            if mono.arity <= max_arity:
                result.append(mono)
    return result


def cylinder_alphabet(source: Presentation, max_arity: int) -> List[Generator]:
    """i0, i1 and sigma of every cell up to the arity bound"""
    return [marked(x, m) for x in source.generators(max_arity) for m in CYLINDER_MARKERS]


def standard_monomials(source: Presentation, max_arity: int, max_vertices: int) -> List[Monomial]:
    """The standard monomial basis of I(O) within the bounds, for an initial base"""
    return monomials(cylinder_alphabet(source, max_arity), max_vertices, max_arity)


def random_monomial(rng: random.Random, labels: Sequence[Generator], max_vertices: int,
                    max_arity: Optional[int] = None, base: BaseOperad = INITIAL) -> Monomial:
    """Grow a tree by grafting random labels into random leaves"""
    mono = Monomial.corolla(rng.choice(labels))
    for _ in range(rng.randint(0, max_vertices - 1)):
        if mono.arity == 0:
            break
        g = rng.choice(labels)
        if max_arity is not None and mono.arity + g.arity - 1 > max_arity:
            continue
        _, mono = compose_monomials_at(mono, rng.randint(1, mono.arity), Monomial.corolla(g), base)
    return mono


def random_element(rng: random.Random, labels: Sequence[Generator], max_vertices: int, arity: int,
                   terms: int = 3, base: BaseOperad = INITIAL, attempts: int = 200) -> Element:
    """A random combination of monomials of one arity and degree; may be zero"""
    first: Optional[Monomial] = None
    pairs: Dict[Monomial, int] = {}
    for _ in range(attempts):
        mono = random_monomial(rng, labels, max_vertices, arity, base)
        if mono.arity != arity:
            continue
        if first is None:
            first = mono
        if mono.degree != first.degree:
            continue
        pairs[mono] = pairs.get(mono, 0) + rng.choice((-2, -1, 1, 1, 2))
        if len(pairs) >= terms:
            break
    return Element.from_pairs(pairs.items(), arity, first.degree if first is not None else None)


def random_chain_presentation(rng: random.Random, size: int = 4) -> ExplicitPresentation:
    """
    A presentation concentrated in arities 0 and 1 with ``size`` generators:
    a stage-0 cycle ``a`` of arity 1 and a stage-0 point ``e`` of arity 0,
    both of degree 0, then cells of random arity whose boundaries are sums of
    words in the cycles plus the boundary of a random word through an earlier
    cell, so d^2 = 0 holds. An arity-0 label only ever ends a word.
    """
    presentation = ExplicitPresentation("chain")
    cycle = presentation.add_generator("a", 1, 0, 0, Element.zero(1, -1))
    point = presentation.add_generator("e", 0, 0, 0, Element.zero(0, -1))
    earlier = [cycle, point]

    def word(middle: List[Generator], arity: int, last: Optional[Generator] = None) -> Element:
        labels = list(middle) + [cycle] * rng.randint(0, 2)
        rng.shuffle(labels)
        if last is not None:
            labels.append(last)
        elif arity == 0:
            labels.append(point)
        return chain_element(labels)

    for k in range(max(size - 2, 0)):
        stage = k + 1
        arity = rng.choice((0, 1))
        degree = rng.randint(1, 2)
        parts = []
        if degree == 1:
            for _ in range(rng.randint(1, 2)):
                parts.append(word([cycle], arity).scale(rng.choice((-1, 1))))
        candidates = [g for g in earlier if g.degree == degree and g.arity >= arity]
        if candidates:
            chosen = rng.choice(candidates)
            if chosen.arity == 0:
                parts.append(presentation.differential(word([], arity, last=chosen)))
            else:
                parts.append(presentation.differential(word([chosen], arity)))
        boundary = Element.sum(parts, arity, degree - 1)
        earlier.append(presentation.add_generator(f"x{stage}", arity, degree, stage, boundary))
    return presentation


def chains(labels: Sequence[Generator], max_length: int) -> Iterator[Tuple[Generator, ...]]:
    """Words x_1 o_1 ... o_1 x_n of length at most ``max_length``; arity-0 labels only come last"""
    unary = [g for g in labels if g.arity == 1]
    nullary = [g for g in labels if g.arity == 0]
    for length in range(1, max_length + 1):
        yield from product(unary, repeat=length)
        for prefix in product(unary, repeat=length - 1):
            for last in nullary:
                yield prefix + (last,)
