"""
The A-infinity operad and its relatives.

``ainf``           mu_n, n >= 2, degree n - 2, d(mu_n) = sum (-1)^(p-i+q(i-1)) mu_p o_i mu_q
``lambda-ainf``    its suspension, mu_n of degree -1, d(mu_n) = sum mu_p{mu_q}
``ainf-d``         adds D_n, n >= 1, degree n - 1 (a homotopy derivation)
``lambda-ainf-d``  its suspension, D_n of degree 0, d(D_n) = sum mu_p{D_q} - D_p{mu_q}
``assoc-der``      associative base plus D_n, the quotient of ``ainf-d`` by mu_n, n >= 3

Stages: mu_n sits at stage n - 2 and D_n at stage n - 1, so D_(n-1) is
attached together with mu_n.
"""

import re
from typing import List

from ..core.base.operads import ASSOCIATIVE, INITIAL
from ..core.errors import UnknownGeneratorError
from ..core.terms.composition import brace, compose_at
from ..core.terms.element import Element
from ..core.terms.generators import Generator, generator
from ..core.terms.signs import sign_power
from ..presentation.presentation import Presentation

_LABEL = re.compile(r"^(mu|D)_(\d+)$")


def _corolla(g: Generator) -> Element:
    return Element.generator(g)


class AInfinityPresentation(Presentation):
    """A-infinity, optionally with the derivation cells, in either grading"""

    def __init__(self, suspended: bool = False, with_derivation: bool = False):
        name = ("lambda-" if suspended else "") + ("ainf-d" if with_derivation else "ainf")
        super().__init__(name, INITIAL)
        self.suspended = suspended
        self.with_derivation = with_derivation

    def mu(self, n: int) -> Generator:
        degree = -1 if self.suspended else n - 2
        return generator(f"mu_{n}", n, degree, n - 2)

    def derivation(self, n: int) -> Generator:
        degree = 0 if self.suspended else n - 1
        return generator(f"D_{n}", n, degree, n - 1)

    def generators(self, max_arity: int) -> List[Generator]:
        found = [self.mu(n) for n in range(2, max_arity + 1)]
        if self.with_derivation:
            found.extend(self.derivation(n) for n in range(1, max_arity + 1))
        return sorted(found, key=lambda g: (g.stage, g.arity, g.name))

    def resolve_cell(self, label: str) -> Generator:
        match = _LABEL.match(label)
        if match:
            kind, n = match.group(1), int(match.group(2))
            if kind == "mu" and n >= 2:
                return self.mu(n)
            if kind == "D" and n >= 1 and self.with_derivation:
                return self.derivation(n)
        raise UnknownGeneratorError(label, self.name)

    def compute_boundary(self, g: Generator) -> Element:
        n = g.arity
        kind = g.name.split("_")[0]
        if kind == "mu":
            return self._mu_boundary(n)
        return self._derivation_boundary(n)

    def _mu_boundary(self, n: int) -> Element:
        parts = []
        for p in range(2, n):
            q = n + 1 - p
            if self.suspended:
                parts.append(brace(_corolla(self.mu(p)), [_corolla(self.mu(q))]))
                continue
            for i in range(1, p + 1):
                term = compose_at(_corolla(self.mu(p)), i, _corolla(self.mu(q)))
                parts.append(term.scale(sign_power(p - i + q * (i - 1))))
        return Element.sum(parts, n, self.mu(n).degree - 1)

    def _derivation_boundary(self, n: int) -> Element:
        parts = []
        for p in range(1, n + 1):
            q = n + 1 - p
            if p >= 2:
                mu, d = _corolla(self.mu(p)), _corolla(self.derivation(q))
                if self.suspended:
                    parts.append(brace(mu, [d]))
                else:
                    for i in range(1, p + 1):
                        parts.append(compose_at(mu, i, d).scale(sign_power((q - 1) * (i - 1))))
            if q >= 2:
                d, mu = _corolla(self.derivation(p)), _corolla(self.mu(q))
                if self.suspended:
                    parts.append(-brace(d, [mu]))
                else:
                    for i in range(1, p + 1):
                        parts.append(compose_at(d, i, mu).scale(-sign_power(p - i + q * (i - 1))))
        return Element.sum(parts, n, self.derivation(n).degree - 1)


class AssociativeDerivationPresentation(Presentation):
    """Associative algebras with a homotopy derivation: cells D_n over the associative base"""

    def __init__(self):
        super().__init__("assoc-der", ASSOCIATIVE)

    def derivation(self, n: int) -> Generator:
        return generator(f"D_{n}", n, n - 1, n - 1)

    def generators(self, max_arity: int) -> List[Generator]:
        return [self.derivation(n) for n in range(1, max_arity + 1)]

    def resolve_cell(self, label: str) -> Generator:
        match = _LABEL.match(label)
        if match and match.group(1) == "D" and int(match.group(2)) >= 1:
            return self.derivation(int(match.group(2)))
        raise UnknownGeneratorError(label, self.name)

    def compute_boundary(self, g: Generator) -> Element:
        n = g.arity
        if n == 1:
            return Element.zero(1, -1)
        mu = _corolla(self.base.label(2))
        lower = _corolla(self.derivation(n - 1))
        parts = [
            compose_at(mu, 1, lower, self.base),
            compose_at(mu, 2, lower, self.base).scale(sign_power(n)),
        ]
        for i in range(1, n):
            parts.append(compose_at(lower, i, mu, self.base).scale(sign_power(n + i)))
        return Element.sum(parts, n, n - 2)
