"""
Base operads: the bottom operad of a relative presentation.

Only degree-0 bases with zero differential are modeled, plus their operadic
suspensions (basis element of arity n in degree 1 - n), which the suspension
functor needs for relative presentations.
"""

import logging
import random
from enum import Enum
from typing import List, Optional, Tuple

from ..errors import ArityError, OperadError
from ..terms.generators import Generator, base_generator
from ..terms.monomial import Monomial
from ..terms.signs import koszul_sign, sign_power
from ..trees.planar import child_positions, parent_positions

logger = logging.getLogger(__name__)

UNIT_NAME = "u"


class BaseKind(str, Enum):
    INITIAL = "initial"
    ASSOC = "assoc"
    UASSOC = "uassoc"


def product_name(arity: int) -> str:
    return f"mu_{arity}"


class BaseOperad:
    """A base operad with a chosen basis and its composition table"""

    def __init__(self, kind: BaseKind, shift: int = 0):
        if shift not in (0, 1):
            raise OperadError(f"Only the base operad and its single suspension are supported, got shift {shift}")
        self.kind = BaseKind(kind)
        self.shift = shift

    @property
    def name(self) -> str:
        return self.kind.value if not self.shift else f"lambda-{self.kind.value}"

    def basis_degree(self, arity: int) -> int:
        return self.shift * (1 - arity)

    def basis(self, arity: int) -> List[str]:
        """Names of the basis elements in the given arity; ``id`` in arity 1"""
        if arity == 1:
            return ["id"]
        if self.kind is BaseKind.INITIAL:
            return []
        if arity >= 2:
            return [product_name(arity)]
        if arity == 0 and self.kind is BaseKind.UASSOC:
            return [UNIT_NAME]
        return []

    def label(self, arity: int) -> Optional[Generator]:
        """Basis label of the given arity, None for the identity"""
        names = self.basis(arity)
        if not names:
            raise ArityError(f"Base operad '{self.name}' has no basis element in arity {arity}")
        if arity == 1:
            return None
        return base_generator(names[0], arity, self.basis_degree(arity))

    def labels(self, max_arity: int) -> List[Generator]:
        """Non-identity basis labels up to an arity bound"""
        found = []
        for arity in range(0, max_arity + 1):
            if arity != 1 and self.basis(arity):
                found.append(self.label(arity))
        return found

    def resolve(self, name: str) -> Optional[Generator]:
        """Basis label by name, or None when the name is not a basis element"""
        if self.kind is BaseKind.INITIAL:
            return None
        if name == UNIT_NAME:
            return self.label(0) if self.kind is BaseKind.UASSOC else None
        if name.startswith("mu_") and name[3:].isdigit():
            arity = int(name[3:])
            if arity >= 2:
                return self.label(arity)
        return None

    def owns(self, g: Generator) -> bool:
        return g.is_base

    def compose(self, outer: Generator, j: int, inner: Generator) -> Tuple[int, Optional[Generator]]:
        """Signed basis composition ``outer o_j inner``; None stands for the identity"""
        p, q = outer.arity, inner.arity
        if not 1 <= j <= p:
            raise ArityError(f"Slot {j} out of range for {outer.label}")
        sign = sign_power((1 - q) * (p - j)) if self.shift else 1
        return sign, self.label(p + q - 1)

    def suspended(self) -> "BaseOperad":
        return BaseOperad(self.kind, self.shift + 1)

    def contract(self, mono: Monomial, rng: Optional[random.Random] = None) -> Tuple[int, Monomial]:
        """
        Bring a monomial to coproduct normal form

        Merges base-labeled vertices with base-labeled parents until none is
        left. The default order merges the rightmost such edge first; passing
        ``rng`` picks edges at random.

        Returns:
            (sign, normal monomial)
        """
        if self.kind is BaseKind.INITIAL:
            return 1, mono
        tokens = list(mono.tokens)
        sign = 1
        while True:
            code = [-1 if tok is None else tok.arity for tok in tokens]
            parents = parent_positions(code)
            candidates = [
                v for v, tok in enumerate(tokens)
                if tok is not None and tok.is_base
                and parents[v] is not None and tokens[parents[v]].is_base
            ]
            if not candidates:
                break
            v = rng.choice(candidates) if rng is not None else candidates[-1]
            p = parents[v]
            outer, inner = tokens[p], tokens[v]
            j = child_positions(code, p).index(v) + 1
            between = [tok for tok in tokens[p + 1:v] if tok is not None]
            # inner moves leftwards past the labels between it and its parent
            entries = [(0, outer.degree), (len(between) + 1, inner.degree)]
            entries.extend((k + 1, tok.degree) for k, tok in enumerate(between))
            table_sign, merged = self.compose(outer, j, inner)
            sign *= koszul_sign(entries) * table_sign
            head = tokens[:p] + ([merged] if merged is not None else [])
            tokens = head + tokens[p + 1:v] + tokens[v + 1:]
        return sign, Monomial(tokens)

    def normalize(self, mono: Monomial) -> Tuple[int, Monomial]:
        if self.kind is BaseKind.INITIAL or not any(tok is not None and tok.is_base for tok in mono.tokens):
            return 1, mono
        return self.contract(mono)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseOperad) and (self.kind, self.shift) == (other.kind, other.shift)

    def __hash__(self) -> int:
        return hash((self.kind, self.shift))

    def __repr__(self) -> str:
        return f"BaseOperad({self.name})"


INITIAL = BaseOperad(BaseKind.INITIAL)
ASSOCIATIVE = BaseOperad(BaseKind.ASSOC)
UNITAL_ASSOCIATIVE = BaseOperad(BaseKind.UASSOC)
