"""
Labeled-tree monomials.

A monomial keeps the preorder token sequence of its tree: a ``Generator`` for
every inner vertex and ``None`` for every leaf. The generators read in token
order are the labels in path order, which is the tensor orientation the
stored coefficient refers to.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..errors import ArityError
from ..trees.planar import LEAF, PlanarTree, check_code, child_positions, subtree_end
from .generators import Generator
from .signs import inversion_sign

Token = Optional[Generator]


class Monomial:
    """Immutable labeled planar tree"""

    __slots__ = ("tokens", "arity", "degree", "_hash")

    def __init__(self, tokens: Sequence[Token]):
        self.tokens: Tuple[Token, ...] = tuple(tokens)
        arity = 0
        degree = 0
        for tok in self.tokens:
            if tok is None:
                arity += 1
            else:
                degree += tok.degree
        self.arity = arity
        self.degree = degree
        self._hash = hash(self.tokens)

    @classmethod
    def identity(cls) -> "Monomial":
        return _IDENTITY

    @classmethod
    def corolla(cls, g: Generator) -> "Monomial":
        return cls((g,) + (None,) * g.arity)

    @classmethod
    def from_shape(cls, shape: PlanarTree, labels: Dict[int, Generator]) -> "Monomial":
        """Label the vertices of ``shape``; arities must agree"""
        tokens: List[Token] = []
        for pos, entry in enumerate(shape.code):
            if entry == LEAF:
                tokens.append(None)
                continue
            g = labels.get(pos)
            if g is None:
                raise ArityError(f"Vertex {pos} has no label")
            if g.arity != entry:
                raise ArityError(f"Label {g.label} of arity {g.arity} on a vertex of arity {entry}")
            tokens.append(g)
        return cls(tokens)

    def checked(self) -> "Monomial":
        """Validate the token sequence as a tree and return self"""
        check_code(self.code)
        return self

    @property
    def code(self) -> Tuple[int, ...]:
        return tuple(LEAF if tok is None else tok.arity for tok in self.tokens)

    @property
    def shape(self) -> PlanarTree:
        return PlanarTree(self.code)

    @property
    def labels(self) -> Dict[int, Generator]:
        return {pos: tok for pos, tok in enumerate(self.tokens) if tok is not None}

    @property
    def generators(self) -> List[Generator]:
        return [tok for tok in self.tokens if tok is not None]

    @property
    def vertex_count(self) -> int:
        return len(self.tokens) - self.arity

    @property
    def is_identity(self) -> bool:
        return len(self.tokens) == 1

    def sort_key(self) -> Tuple:
        return tuple((0,) if tok is None else (1,) + tok.sort_key() for tok in self.tokens)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._hash == other._hash and self.tokens == other.tokens

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .render import render_monomial
        return f"Monomial({render_monomial(self)})"


_IDENTITY = Monomial((None,))


def _odd(tok: Token) -> bool:
    return tok is not None and tok.degree % 2 == 1


def assemble(skeleton: Sequence[Optional[int]], blocks: Sequence[Monomial]) -> Tuple[int, Monomial]:
    """
    Graft blocks along a skeleton tree

    Args:
        skeleton: preorder tokens of the coarse tree, a block index for every
            vertex and None for every leaf; the arity of a vertex is the arity
            of its block
        blocks: the monomials placed at the coarse vertices

    Returns:
        (sign, monomial) with block_0 (x) block_1 (x) ... = sign * monomial,
        the sign being the Koszul sign of carrying the labels from block
        order into path order
    """
    out: List[Token] = []
    odd_keys: List[Tuple[int, int]] = []
    it = iter(skeleton)

    def walk() -> None:
        b = next(it)
        if b is None:
            out.append(None)
            return
        for k, tok in enumerate(blocks[b].tokens):
            if tok is None:
                walk()
            else:
                out.append(tok)
                if tok.degree % 2:
                    odd_keys.append((b, k))

    try:
        walk()
    except StopIteration:
        raise ArityError("Skeleton is shorter than its blocks require") from None
    if next(it, -2) != -2:
        raise ArityError("Skeleton has nodes left over after assembly")
    return inversion_sign(odd_keys), Monomial(out)


def splice(mono: Monomial, pos: int, block: Monomial) -> Tuple[int, Monomial]:
    """
    Replace the vertex at ``pos`` by ``block`` (same arity)

    The sign carries the tensor with the block's labels in place of the old
    label into path order.
    """
    tokens = mono.tokens
    code = mono.code
    if block.arity != code[pos]:
        raise ArityError(f"Cannot replace a vertex of arity {code[pos]} by a term of arity {block.arity}")
    end = subtree_end(code, pos)
    spans = []
    for child in child_positions(code, pos):
        spans.append((child, subtree_end(code, child)))

    out: List[Token] = list(tokens[:pos])
    odd_keys: List[Tuple[int, int]] = [(0, t) for t in range(pos) if _odd(tokens[t])]
    child = 0
    for s, tok in enumerate(block.tokens):
        if tok is None:
            a, b = spans[child]
            child += 1
            out.extend(tokens[a:b])
            odd_keys.extend((2, t) for t in range(a, b) if _odd(tokens[t]))
        else:
            out.append(tok)
            if tok.degree % 2:
                odd_keys.append((1, s))
    out.extend(tokens[end:])
    odd_keys.extend((2, t) for t in range(end, len(tokens)) if _odd(tokens[t]))
    return inversion_sign(odd_keys), Monomial(out)


def relabel(mono: Monomial, rule: Callable[[Generator], Optional[Generator]]) -> Optional[Monomial]:
    """Apply a degree-preserving label map; None if any label maps to zero"""
    out: List[Token] = []
    for tok in mono.tokens:
        if tok is None:
            out.append(None)
            continue
        image = rule(tok)
        if image is None:
            return None
        out.append(image)
    return Monomial(out)
