"""Instance-specific resource estimates for two-dimensional posets.

The counting recursion visits exactly the downsets of the poset it runs
on, and downsets are in bijection with antichains.  In a permutation
poset the antichains are the decreasing subsequences, which a quadratic
recursion counts.  The transformed poset is again two-dimensional (each
replaced class becomes a short diagonal chain next to one of its
members), so its state count is just as cheap to predict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import bitset
from .bounds import large_matching_base, pi_le_base, tau_le_base
from .errors import InvariantError
from .linext import NeighborhoodPartition, Strategy, TransformedPoset, build_virtual_poset, plan_2d_star
from .matching import PackingStats
from .poset import Permutation, poset_from_permutation


def count_antichains_2d(perm: Permutation) -> int:
    """Antichains (equivalently downsets) of a permutation poset, empty set included."""
    values = perm.values
    ending = []
    for j, v in enumerate(values):
        ending.append(1 + sum(ending[i] for i in range(j) if values[i] > v))
    return 1 + sum(ending)


@dataclass(frozen=True)
class Embedding:
    points: tuple  # (x, y) Fractions indexed by transformed-poset id
    transformed: TransformedPoset

    def permutation(self) -> Permutation:
        """Rank the points on both axes."""
        by_x = sorted(range(len(self.points)), key=lambda k: self.points[k][0])
        y_rank = {k: r + 1 for r, k in enumerate(sorted(range(len(self.points)),
                                                          key=lambda k: self.points[k][1]))}
        return Permutation(tuple(y_rank[k] for k in by_x))


def embed_transformed(perm: Permutation, partition: NeighborhoodPartition) -> Embedding:
    """Plane points whose domination order is the transformed poset.

    Carried-over elements keep their integer point ``(i + 1, perm[i])``.
    Class ``i`` is drawn as an increasing run on the diagonal of the
    half-unit box centred on its smallest member.
    """
    poset = poset_from_permutation(perm)
    carried_mask = poset.ground & ~partition.support
    transformed = build_virtual_poset(poset, carried_mask, partition)
    points = [(Fraction(x + 1), Fraction(perm.values[x])) for x in transformed.carried]
    quarter = Fraction(1, 4)
    for cls, size in zip(partition.classes, partition.class_sizes):
        rep = bitset.lowest(cls)
        cx, cy = Fraction(rep + 1), Fraction(perm.values[rep])
        step = Fraction(1, 2 * (size + 1))
        for k in range(1, size + 1):
            points.append((cx - quarter + k * step, cy - quarter + k * step))
    _verify(points, transformed)
    return Embedding(tuple(points), transformed)


def _verify(points, transformed):
    tp = transformed.poset
    xs = {p[0] for p in points}
    ys = {p[1] for p in points}
    if len(xs) != len(points) or len(ys) != len(points):
        raise InvariantError("embedding aligns two points on a coordinate")
    for a in range(tp.n):
        for b in range(tp.n):
            dominated = points[a][0] < points[b][0] and points[a][1] < points[b][1]
            if dominated != tp.less(a, b):
                raise InvariantError(f"embedding disagrees with the transformed order on ({a}, {b})")


@dataclass
class ResourceEstimate:
    n: int
    downsets: int
    downsets_transformed: Optional[int]
    stats: PackingStats
    strategy: Strategy
    large_matching: bool
    tau: float
    pi: float

    @property
    def predicted_states(self) -> int:
        """States the 2d-star count will memoise."""
        if self.strategy is Strategy.TRANSFORMED:
            return self.downsets_transformed
        return self.downsets


def estimate_resources(perm: Permutation) -> ResourceEstimate:
    poset = poset_from_permutation(perm)
    plan = plan_2d_star(poset)
    stats = plan.stats
    transformed = None
    if plan.partition is not None:
        transformed = count_antichains_2d(embed_transformed(perm, plan.partition).permutation())
    if plan.large_matching:
        tau = pi = large_matching_base(stats)
    else:
        tau, pi = tau_le_base(stats), pi_le_base(stats)
    return ResourceEstimate(poset.n, count_antichains_2d(perm), transformed, stats,
                            plan.strategy, plan.large_matching, tau, pi)
