"""
Koszul sign engine.

Every sign in the package that comes from reordering homogeneous factors is
computed here: the sign of a permutation of a tensor is (-1) to the number of
inversions among odd-degree factors.
"""

from typing import Any, Hashable, Iterable, List, Sequence, Tuple


def sign_power(exponent: int) -> int:
    """(-1) ** exponent for any integer exponent"""
    return -1 if exponent % 2 else 1


def inversion_sign(keys: Sequence[Hashable]) -> int:
    """Sign of the permutation listing ``keys`` (odd factors only) in target order"""
    inversions = 0
    for a in range(len(keys)):
        ka = keys[a]
        for b in range(a + 1, len(keys)):
            if ka > keys[b]:
                inversions += 1
    return -1 if inversions % 2 else 1


def koszul_sign(entries: Iterable[Tuple[Any, int]]) -> int:
    """
    Koszul sign of carrying a tensor from source order into target order

    Args:
        entries: (source key, degree) pairs listed in target order; source
            order is the sort order of the keys

    Returns:
        +1 or -1
    """
    odd: List[Any] = [key for key, degree in entries if degree % 2]
    return inversion_sign(odd)
