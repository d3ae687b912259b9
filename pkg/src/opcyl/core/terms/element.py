from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..errors import ArityError, DegreeError
from .generators import Generator
from .monomial import Monomial


def accumulate(terms: Dict[Monomial, int], mono: Monomial, coeff: int) -> None:
    """Add ``coeff * mono`` into a term map, dropping cancelled terms"""
    if not coeff:
        return
    total = terms.get(mono, 0) + coeff
    if total:
        terms[mono] = total
    else:
        del terms[mono]


class Element:
    """
    Finite Z-linear combination of monomials of one arity and degree

    The zero element keeps the arity and degree it was created with; a zero
    without metadata (both None) adds to anything.
    """

    __slots__ = ("terms", "arity", "degree")

    def __init__(
        self,
        terms: Optional[Dict[Monomial, int]] = None,
        arity: Optional[int] = None,
        degree: Optional[int] = None,
    ):
        clean = {m: c for m, c in (terms or {}).items() if c}
        if clean:
            first = next(iter(clean))
            if arity is None:
                arity = first.arity
            if degree is None:
                degree = first.degree
            for mono in clean:
                if mono.arity != arity:
                    raise ArityError(f"Term of arity {mono.arity} in an element of arity {arity}")
                if mono.degree != degree:
                    raise DegreeError(f"Term of degree {mono.degree} in an element of degree {degree}")
        self.terms: Dict[Monomial, int] = clean
        self.arity = arity
        self.degree = degree

    @classmethod
    def zero(cls, arity: Optional[int] = None, degree: Optional[int] = None) -> "Element":
        return cls({}, arity, degree)

    @classmethod
    def of(cls, mono: Monomial, coeff: int = 1) -> "Element":
        return cls({mono: coeff}, mono.arity, mono.degree)

    @classmethod
    def identity(cls) -> "Element":
        return cls.of(Monomial.identity())

    @classmethod
    def generator(cls, g: Generator, coeff: int = 1) -> "Element":
        return cls.of(Monomial.corolla(g), coeff)

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[Tuple[Monomial, int]],
        arity: Optional[int] = None,
        degree: Optional[int] = None,
    ) -> "Element":
        terms: Dict[Monomial, int] = {}
        for mono, coeff in pairs:
            accumulate(terms, mono, coeff)
        return cls(terms, arity, degree)

    @classmethod
    def sum(cls, elements: Iterable["Element"], arity: Optional[int] = None,
            degree: Optional[int] = None) -> "Element":
        terms: Dict[Monomial, int] = {}
        for element in elements:
            if element.arity is not None and arity is None:
                arity = element.arity
            if element.degree is not None and degree is None:
                degree = element.degree
            for mono, coeff in element.terms.items():
                accumulate(terms, mono, coeff)
        return cls(terms, arity, degree)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.sorted_terms()]

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def _merged_metadata(self, other: "Element") -> Tuple[Optional[int], Optional[int]]:
        if self.terms and other.terms:
            if self.arity != other.arity:
                raise ArityError(f"Cannot add elements of arities {self.arity} and {other.arity}")
            if self.degree != other.degree:
                raise DegreeError(f"Cannot add elements of degrees {self.degree} and {other.degree}")
        arity = self.arity if self.arity is not None else other.arity
        degree = self.degree if self.degree is not None else other.degree
        if self.terms and not other.terms:
            arity, degree = self.arity, self.degree
        elif other.terms and not self.terms:
            arity, degree = other.arity, other.degree
        return arity, degree

    def __add__(self, other: "Element") -> "Element":
        arity, degree = self._merged_metadata(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            accumulate(terms, mono, coeff)
        return Element(terms, arity, degree)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element({m: -c for m, c in self.terms.items()}, self.arity, self.degree)

    def scale(self, k: int) -> "Element":
        if not k:
            return Element.zero(self.arity, self.degree)
        return Element({m: k * c for m, c in self.terms.items()}, self.arity, self.degree)

    def __mul__(self, k: int) -> "Element":
        return self.scale(k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    def __repr__(self) -> str:
        from .render import render_element
        return f"Element({render_element(self)})"
