"""Vertex sets as Python integers.

A vertex set over a ground set {0, ..., n-1} is stored as a nonnegative
int whose bit ``i`` is set iff element ``i`` is a member.  Union,
intersection and difference are ``|``, ``&`` and ``& ~``.
"""

from typing import Iterable, Iterator

VertexSet = int


def bit(i: int) -> VertexSet:
    return 1 << i


def from_iter(elements: Iterable[int]) -> VertexSet:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def full(n: int) -> VertexSet:
    return (1 << n) - 1


def members(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: VertexSet) -> list:
    return list(members(mask))


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def lowest(mask: VertexSet) -> int:
    """Smallest member of a nonempty set."""
    return (mask & -mask).bit_length() - 1
