"""Counting linear extensions.

``count_le_dp`` is the classical memoised recursion over downsets.
``count_le_2d`` and ``count_le_2d_star`` shrink the downset lattice of a
two-dimensional poset first: an antichain is split into classes of
elements with equal comparability neighbourhoods, each class is replaced
by a chain of placeholders, and the count is rescaled by the product of
class-size factorials.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from . import bitset
from .bitset import VertexSet
from .errors import InvariantError, ResourceError
from .matching import (LE, Matching, PackingStats, canonicalize, max_matching_comparability,
                       pack_quartets, pack_triplets)
from .poset import Poset, is_antichain, neighborhood

DEFAULT_MAX_STATES = 2 ** 27


class Strategy(enum.Enum):
    ORIGINAL = "Original"
    TRANSFORMED = "Transformed"


@dataclass(frozen=True)
class NeighborhoodPartition:
    classes: tuple  # VertexSets, ordered by smallest member

    @property
    def class_sizes(self) -> tuple:
        return tuple(bitset.size(c) for c in self.classes)

    @property
    def support(self) -> VertexSet:
        mask = 0
        for c in self.classes:
            mask |= c
        return mask

    def __len__(self):
        return len(self.classes)


@dataclass(frozen=True)
class TransformedPoset:
    """The poset with each partition class replaced by a chain.

    Carried-over elements occupy ids ``0 .. len(carried)-1`` in increasing
    original order; class ``i`` occupies ``virtual_ranges[i]``, its chain
    running upward with the id.
    """

    poset: Poset
    class_sizes: tuple
    virtual_ranges: tuple
    carried: tuple


@dataclass
class CountResult:
    count: int
    states_visited: int
    algorithm: str
    stats: Optional[PackingStats] = None
    route: str = "original"
    table: Optional[dict] = field(default=None, repr=False)


def count_le_dp(poset: Poset, max_states: int = DEFAULT_MAX_STATES,
                keep_table: bool = False) -> CountResult:
    """LE(Y) = sum of LE(Y - x) over maxima x of Y, from Y = X downwards.

    Only downsets are ever reached, so ``states_visited`` is the number of
    downsets of the poset (the empty set included).
    """
    above = poset.above
    memo = {0: 1}

    def le(Y):
        got = memo.get(Y)
        if got is not None:
            return got
        total = 0
        rest = Y
        while rest:
            low = rest & -rest
            rest ^= low
            x = low.bit_length() - 1
            if not above[x] & Y:
                total += le(Y ^ low)
        if len(memo) >= max_states:
            raise ResourceError(f"more than {max_states} memoised states")
        memo[Y] = total
        return total

    count = le(poset.ground)
    return CountResult(count, len(memo), "naive", route="original",
                       table=memo if keep_table else None)


def partition_by_neighborhood(poset: Poset, A: VertexSet) -> NeighborhoodPartition:
    if not is_antichain(poset, A):
        raise InvariantError("partition target is not an antichain")
    groups = {}
    for x in bitset.members(A):
        key = neighborhood(poset, x)
        groups[key] = groups.get(key, 0) | 1 << x
    classes = sorted(groups.values(), key=bitset.lowest)
    return NeighborhoodPartition(tuple(classes))


def build_virtual_poset(poset: Poset, W: VertexSet,
                        partition: NeighborhoodPartition) -> TransformedPoset:
    """Replace every class by a chain; ``W`` is the set of carried-over elements."""
    support = partition.support
    if W & support or (W | support) != poset.ground:
        raise InvariantError("carried set and partition classes must split the ground set")
    reps = []
    for cls in partition.classes:
        rep = bitset.lowest(cls)
        nb = neighborhood(poset, rep)
        for z in bitset.members(cls):
            if neighborhood(poset, z) != nb:
                raise InvariantError(f"class members {rep} and {z} have different neighbourhoods")
        reps.append(rep)

    carried = bitset.to_list(W)
    new_id = {x: i for i, x in enumerate(carried)}
    ranges = []
    start = len(carried)
    for cls in partition.classes:
        size = bitset.size(cls)
        ranges.append(range(start, start + size))
        start += size
    n = start

    def image(mask):
        # carried elements of an original vertex set, in new ids
        return bitset.from_iter(new_id[z] for z in bitset.members(mask & W))

    above = [0] * n
    below = [0] * n
    for x in carried:
        above[new_id[x]] = image(poset.above[x])
        below[new_id[x]] = image(poset.below[x])
    for rep, rng in zip(reps, ranges):
        up = image(poset.above[rep])
        down = image(poset.below[rep])
        for k in rng:
            above[k] = up | bitset.from_iter(range(k + 1, rng.stop))
            below[k] = down | bitset.from_iter(range(rng.start, k))
        # carried elements related to the representative see the whole chain
        chain_mask = bitset.from_iter(rng)
        for y in bitset.members(down):
            above[y] |= chain_mask
        for y in bitset.members(up):
            below[y] |= chain_mask
    return TransformedPoset(Poset(n, above, below), partition.class_sizes,
                            tuple(ranges), tuple(carried))


def factorial_product(sizes) -> int:
    return math.prod(math.factorial(a) for a in sizes)


def _count_transformed(poset, W, partition, max_states, algorithm, stats):
    transformed = build_virtual_poset(poset, W, partition)
    inner = count_le_dp(transformed.poset, max_states)
    return CountResult(inner.count * factorial_product(partition.class_sizes),
                       inner.states_visited, algorithm, stats, route="transformed")


def count_le_2d(poset: Poset, max_states: int = DEFAULT_MAX_STATES) -> CountResult:
    """Count via a maximum matching and the neighbourhood partition of its complement.

    The poset is assumed two-dimensional; the count is exact for any poset,
    only the speed-up depends on dimension.
    """
    M = max_matching_comparability(poset)
    stats = PackingStats(poset.n, len(M))
    if 3 * len(M) >= poset.n:
        result = count_le_dp(poset, max_states)
        return CountResult(result.count, result.states_visited, "2d", stats, route="large-matching")
    W = M.matched
    partition = partition_by_neighborhood(poset, poset.ground & ~W)
    return _count_transformed(poset, W, partition, max_states, "2d", stats)


def select_strategy(stats: PackingStats) -> Strategy:
    """Original iff 2*gamma >= 1 - 2*alpha - beta - gamma (ties go to Original)."""
    if 2 * stats.q >= stats.leftover:
        return Strategy.ORIGINAL
    return Strategy.TRANSFORMED


@dataclass
class StarPlan:
    """Everything ``count_le_2d_star`` decides before running the DP."""

    matching: Matching
    stats: PackingStats
    strategy: Strategy
    large_matching: bool
    triplets: list = field(default_factory=list)
    quartets: list = field(default_factory=list)
    leftover: VertexSet = 0
    partition: Optional[NeighborhoodPartition] = None


def plan_2d_star(poset: Poset) -> StarPlan:
    M = canonicalize(poset, max_matching_comparability(poset))
    n, m = poset.n, len(M)
    if 3 * m >= n:
        return StarPlan(M, PackingStats(n, m), Strategy.ORIGINAL, True)
    A = poset.ground & ~M.matched
    triplets, anchors3 = pack_triplets(poset, M, A, LE)
    quartets, anchors4 = pack_quartets(poset, triplets, A & ~anchors3)
    leftover = A & ~anchors3 & ~anchors4
    stats = PackingStats(n, m, len(triplets), len(quartets))
    return StarPlan(M, stats, select_strategy(stats), False, triplets, quartets, leftover,
                    partition_by_neighborhood(poset, leftover))


def count_le_2d_star(poset: Poset, max_states: int = DEFAULT_MAX_STATES) -> CountResult:
    """Count via a canonical matching plus triplet and quartet packing.

    Picks between the original poset and the transformed one (only the
    leftover antichain part is virtualised) by comparing the two downset
    bounds at the measured packing fractions.
    """
    plan = plan_2d_star(poset)
    if plan.strategy is Strategy.ORIGINAL:
        result = count_le_dp(poset, max_states)
        route = "large-matching" if plan.large_matching else "original"
        return CountResult(result.count, result.states_visited, "2d-star", plan.stats, route=route)
    return _count_transformed(poset, poset.ground & ~plan.leftover, plan.partition,
                              max_states, "2d-star", plan.stats)
