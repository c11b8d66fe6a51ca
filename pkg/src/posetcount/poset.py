"""Poset representation, permutation encoding of 2D posets and brute-force oracles.

Elements are ``0 .. n-1``.  The order relation is stored twice, as
per-element bitmasks of strict successors (``above``) and strict
predecessors (``below``); both are transitively closed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import bitset
from .bitset import VertexSet
from .errors import CycleError, InvariantError, SizeError

BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n``; index and value are the two realizers."""

    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    def dual(self) -> "Permutation":
        """Reverse one realizer, exchanging chains and antichains."""
        n = len(self.values)
        return Permutation(tuple(n + 1 - v for v in self.values))


class Poset:
    """A strict partial order on ``range(n)``.

    Instances are immutable; build them with :func:`build_from_pairs` or
    :func:`poset_from_permutation` rather than calling the constructor,
    which trusts that ``above``/``below`` are closed and consistent.
    """

    __slots__ = ("n", "above", "below")

    def __init__(self, n: int, above: Sequence[VertexSet], below: Sequence[VertexSet]):
        self.n = n
        self.above = tuple(above)
        self.below = tuple(below)

    def __repr__(self):
        return f"Poset(n={self.n}, relations={self.relations()})"

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.n == other.n
                and self.above == other.above)

    def __hash__(self):
        return hash((self.n, self.above))

    @property
    def ground(self) -> VertexSet:
        return bitset.full(self.n)

    def less(self, x: int, y: int) -> bool:
        """True iff x strictly precedes y."""
        return bool(self.above[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return bool((self.above[x] | self.below[x]) >> y & 1)

    def relations(self) -> list:
        """All pairs (x, y) with x strictly below y, sorted."""
        return [(x, y) for x in range(self.n) for y in bitset.members(self.above[x])]

    def num_relations(self) -> int:
        return sum(bitset.size(a) for a in self.above)

    def induced(self, elements: Sequence[int]) -> "Poset":
        """Subposet on ``elements``, relabelled ``0..k-1`` in the given order."""
        index = {e: i for i, e in enumerate(elements)}
        above = []
        below = []
        for e in elements:
            above.append(bitset.from_iter(index[z] for z in bitset.members(self.above[e]) if z in index))
            below.append(bitset.from_iter(index[z] for z in bitset.members(self.below[e]) if z in index))
        return Poset(len(elements), above, below)

    def check(self) -> None:
        """Raise InvariantError unless the stored relation is a valid closed order."""
        for x in range(self.n):
            if self.above[x] >> x & 1:
                raise InvariantError(f"relation not irreflexive at {x}")
            if self.above[x] & self.below[x]:
                raise InvariantError(f"relation not antisymmetric at {x}")
            for y in bitset.members(self.above[x]):
                if not self.below[y] >> x & 1:
                    raise InvariantError(f"above/below disagree on ({x}, {y})")
                if self.above[y] & ~self.above[x]:
                    raise InvariantError(f"relation not transitive through {y}")
            for y in bitset.members(self.below[x]):
                if not self.above[y] >> x & 1:
                    raise InvariantError(f"above/below disagree on ({y}, {x})")


def build_from_pairs(n: int, pairs: Iterable[tuple]) -> Poset:
    """Transitive closure of ``pairs`` as a Poset.

    Raises CycleError when the pairs contain a directed cycle (a self-loop
    included) and IndexError when an element is outside ``range(n)``.
    """
    succ = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"pair ({u}, {v}) out of range for n={n}")
        if u == v:
            raise CycleError(f"self-loop at {u}")
        succ[u] |= 1 << v
    # Floyd-Warshall over bitsets
    for k in range(n):
        kbit = 1 << k
        reach_k = succ[k]
        for i in range(n):
            if succ[i] & kbit:
                succ[i] |= reach_k
    below = [0] * n
    for x in range(n):
        if succ[x] >> x & 1:
            raise CycleError(f"directed cycle through {x}")
        for y in bitset.members(succ[x]):
            below[y] |= 1 << x
    return Poset(n, succ, below)


def poset_from_permutation(perm: Permutation | Sequence[int]) -> Poset:
    """Point-domination order of the points ``(i, perm[i])``."""
    values = perm.values if isinstance(perm, Permutation) else tuple(perm)
    n = len(values)
    above = [0] * n
    below = [0] * n
    for i in range(n):
        vi = values[i]
        for j in range(i + 1, n):
            if vi < values[j]:
                above[i] |= 1 << j
                below[j] |= 1 << i
    return Poset(n, above, below)


def disjoint_union(p: Poset, q: Poset) -> Poset:
    """Place ``q`` after ``p`` with no relations between them."""
    shift = p.n
    pairs = p.relations() + [(x + shift, y + shift) for x, y in q.relations()]
    return build_from_pairs(p.n + q.n, pairs)


def chain(n: int) -> Poset:
    return poset_from_permutation(Permutation.identity(n))


def antichain(n: int) -> Poset:
    return Poset(n, [0] * n, [0] * n)


def maxima(poset: Poset, Y: VertexSet) -> VertexSet:
    """Elements of Y with no strict successor inside Y."""
    result = 0
    for x in bitset.members(Y):
        if not poset.above[x] & Y:
            result |= 1 << x
    return result


def is_downset(poset: Poset, Y: VertexSet) -> bool:
    for y in bitset.members(Y):
        if poset.below[y] & ~Y:
            return False
    return True


def is_antichain(poset: Poset, Y: VertexSet) -> bool:
    for y in bitset.members(Y):
        if poset.above[y] & Y:
            return False
    return True


def neighborhood(poset: Poset, x: int) -> VertexSet:
    """Open neighbourhood of x in the comparability graph."""
    return poset.above[x] | poset.below[x]


def count_jumps(poset: Poset, order: Sequence[int]) -> int:
    """Number of adjacent incomparable pairs in ``order``."""
    return sum(1 for a, b in zip(order, order[1:]) if not poset.less(a, b))


def is_linear_extension(poset: Poset, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(poset.n)):
        return False
    seen = 0
    for x in order:
        if poset.below[x] & ~seen:
            return False
        seen |= 1 << x
    return True


def linear_extensions(poset: Poset) -> Iterator[list]:
    """Generate every linear extension by backtracking (no memoisation)."""
    n = poset.n
    order = []

    def extend(placed):
        if len(order) == n:
            yield list(order)
            return
        for x in range(n):
            if not placed >> x & 1 and not poset.below[x] & ~placed:
                order.append(x)
                yield from extend(placed | 1 << x)
                order.pop()

    yield from extend(0)


def _guard(poset: Poset) -> None:
    if poset.n > BRUTE_FORCE_LIMIT:
        raise SizeError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got n={poset.n}")


def brute_force_le(poset: Poset) -> int:
    """Count linear extensions one by one."""
    _guard(poset)
    return sum(1 for _ in linear_extensions(poset))


def brute_force_jump_witness(poset: Poset) -> tuple:
    """Minimum jump number and the first linear extension attaining it."""
    _guard(poset)
    if poset.n == 0:
        return 0, []
    best, witness = None, None
    for order in linear_extensions(poset):
        j = count_jumps(poset, order)
        if best is None or j < best:
            best, witness = j, order
    return best, witness


def brute_force_jump(poset: Poset) -> int:
    return brute_force_jump_witness(poset)[0]


def all_posets(n: int) -> Iterator[Poset]:
    """Every labelled poset on ``n`` elements (practical for n <= 4)."""
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        rel = {p for p, c in zip(pairs, chosen) if c}
        if any((y, x) in rel for x, y in rel):
            continue
        if any((x, z) not in rel for x, y in rel for y2, z in rel if y == y2 and x != z):
            continue
        yield build_from_pairs(n, rel)


def comparability_connected(poset: Poset) -> bool:
    if poset.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for x in bitset.members(frontier):
            nxt |= neighborhood(poset, x)
        frontier = nxt & ~seen
        seen |= nxt
    return seen == poset.ground


def count_downsets_scan(poset: Poset) -> int:
    """Downset count by scanning all 2^n subsets."""
    return sum(1 for Y in range(1 << poset.n) if is_downset(poset, Y))
