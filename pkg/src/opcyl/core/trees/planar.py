"""
Planted planar trees.

A tree is stored as its Polish code: the preorder (depth-first, left to right,
parent before children) sequence of its nodes, where an inner vertex is
recorded by its arity and a leaf by ``LEAF``. Vertex handles are positions in
that sequence, so the natural order of handles is the path order.
"""

from typing import Any, Dict, List, NamedTuple, Optional, Sequence

from ..errors import ArityError

LEAF = -1


def check_code(code: Sequence[int]) -> None:
    """Raise ArityError unless ``code`` is the Polish code of one planted tree"""
    pending = 1
    for pos, entry in enumerate(code):
        if pending == 0:
            raise ArityError(f"Trailing nodes after position {pos - 1} in tree code {tuple(code)}")
        if entry < LEAF:
            raise ArityError(f"Invalid entry {entry} in tree code")
        pending -= 1
        if entry != LEAF:
            pending += entry
    if pending != 0:
        raise ArityError(f"Tree code {tuple(code)} is missing {pending} node(s)")


def subtree_end(code: Sequence[int], pos: int) -> int:
    """One past the last position of the subtree rooted at ``pos``"""
    pending = 1
    while pending:
        entry = code[pos]
        pending += entry - 1 if entry != LEAF else -1
        pos += 1
    return pos


def child_positions(code: Sequence[int], pos: int) -> List[int]:
    """Positions of the children (leaves included) of the vertex at ``pos``"""
    children = []
    nxt = pos + 1
    for _ in range(code[pos]):
        children.append(nxt)
        nxt = subtree_end(code, nxt)
    return children


def parent_positions(code: Sequence[int]) -> List[Optional[int]]:
    """Parent position of every node, ``None`` for the root"""
    parents: List[Optional[int]] = []
    stack: List[List[int]] = []  # [position, children still to come]
    for pos, entry in enumerate(code):
        if stack:
            frame = stack[-1]
            parents.append(frame[0])
            frame[1] -= 1
            if frame[1] == 0:
                stack.pop()
        else:
            parents.append(None)
        if entry > 0:
            stack.append([pos, entry])
    return parents


class GraftResult(NamedTuple):
    """Result of grafting, with the vertex injections of both operands"""
    tree: "PlanarTree"
    left: Dict[int, int]
    right: Dict[int, int]


class PlanarTree:
    """Immutable planted planar tree with implicitly numbered leaves"""

    __slots__ = ("code", "_hash")

    def __init__(self, code: Sequence[int]):
        code = tuple(code)
        check_code(code)
        self.code = code
        self._hash = hash(code)

    @classmethod
    def edge(cls) -> "PlanarTree":
        """The bare edge: no inner vertex, one leaf"""
        return cls((LEAF,))

    @classmethod
    def corolla(cls, arity: int) -> "PlanarTree":
        if arity < 0:
            raise ArityError(f"Negative arity {arity}")
        return cls((arity,) + (LEAF,) * arity)

    @classmethod
    def from_nested(cls, nested: Any) -> "PlanarTree":
        """Build from nested lists: a vertex is the list of its children, a leaf is None"""
        code: List[int] = []

        def walk(node: Any) -> None:
            if node is None:
                code.append(LEAF)
                return
            code.append(len(node))
            for child in node:
                walk(child)

        walk(nested)
        return cls(code)

    def to_nested(self) -> Any:
        it = iter(self.code)

        def walk() -> Any:
            entry = next(it)
            if entry == LEAF:
                return None
            return [walk() for _ in range(entry)]

        return walk()

    @property
    def leaf_count(self) -> int:
        return self.code.count(LEAF)

    @property
    def vertex_count(self) -> int:
        return len(self.code) - self.leaf_count

    def path_order_vertices(self) -> List[int]:
        return [pos for pos, entry in enumerate(self.code) if entry != LEAF]

    def children(self, vertex: int) -> List[int]:
        return child_positions(self.code, vertex)

    def leaf_position(self, i: int) -> int:
        """Position of the i-th leaf, counting from 1"""
        if not 1 <= i <= self.leaf_count:
            raise ArityError(f"Leaf index {i} out of range 1..{self.leaf_count}")
        seen = 0
        for pos, entry in enumerate(self.code):
            if entry == LEAF:
                seen += 1
                if seen == i:
                    return pos
        raise AssertionError("unreachable")

    def vertex_levels(self) -> Dict[int, int]:
        levels: Dict[int, int] = {}
        parents = parent_positions(self.code)
        for pos, entry in enumerate(self.code):
            if entry == LEAF:
                continue
            parent = parents[pos]
            levels[pos] = 1 if parent is None else levels[parent] + 1
        return levels

    def graft(self, i: int, other: "PlanarTree") -> GraftResult:
        pos = self.leaf_position(i)
        code = self.code[:pos] + other.code + self.code[pos + 1:]
        shift = len(other.code) - 1
        left = {v: (v if v < pos else v + shift) for v in self.path_order_vertices()}
        right = {v: v + pos for v in other.path_order_vertices()}
        return GraftResult(PlanarTree(code), left, right)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarTree) and self.code == other.code

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PlanarTree({self.to_nested()!r})"


def path_order_vertices(tree: PlanarTree) -> List[int]:
    return tree.path_order_vertices()


def graft(tree: PlanarTree, i: int, other: PlanarTree) -> GraftResult:
    return tree.graft(i, other)


def vertex_levels(tree: PlanarTree) -> Dict[int, int]:
    return tree.vertex_levels()
