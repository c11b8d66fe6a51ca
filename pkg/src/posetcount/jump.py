"""Minimum jump number via the bump recursion.

A linear extension with ``b`` adjacent comparable pairs (bumps) has
``n - 1 - b`` jumps, so everything here maximises bumps.  States are
pairs ``(Y, x)``: the best bump count of an ordering of the subposet
induced by ``Y`` that ends in ``x``.

Deleting an element never increases the best bump count (re-insert it
right after its last predecessor), so the maximum over any family of
state sets that contains an optimal "non-trivial chain" set is the bump
number of the whole poset.  The JN restriction uses that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from . import bitset
from .bitset import VertexSet
from .errors import InvariantError, ResourceError
from .linext import DEFAULT_MAX_STATES
from .matching import JN, PackingStats, canonicalize, max_matching_comparability, pack_triplets
from .poset import Poset, count_jumps

Admissible = Callable[[VertexSet], bool]


class BumpTable(NamedTuple):
    """Per-set entries ``{last: (bump, previous_last)}`` plus the argmax state."""

    entries: dict
    best: tuple  # (Y, last) or (0, -1) when empty


class BumpResult(NamedTuple):
    bump: int
    states: int
    table: BumpTable


@dataclass
class JumpResult:
    jump_number: int
    bump_number: int
    witness: Optional[list]
    states_visited: int
    algorithm: str = "naive"
    stats: Optional[PackingStats] = None


def bump_dp(poset: Poset, admissible: Optional[Admissible] = None,
            max_states: int = DEFAULT_MAX_STATES) -> BumpResult:
    """Best bump count over all admissible states.

    States are generated upward from the empty set by appending an element
    that is maximal in the enlarged set.  ``admissible`` must hold for every
    set obtained from an admissible one by deleting a maximal element; the
    default admits exactly the downsets.  ``states`` counts (set, last)
    pairs.
    """
    above, below = poset.above, poset.below
    n = poset.n
    entries = {0: {}}
    layer = [0]
    best_val, best_state = -1, (0, -1)
    states = 0
    while layer:
        nxt = []
        for Y in layer:
            ends = entries[Y]
            for x in range(n):
                xb = 1 << x
                if Y & xb or above[x] & Y:
                    continue
                Z = Y | xb
                if admissible is None:
                    if below[x] & ~Y:
                        continue
                elif not admissible(Z):
                    continue
                val, prev = 0, -1
                if ends:
                    val = -1
                    bx = below[x]
                    for y, (v, _) in ends.items():
                        v += bx >> y & 1
                        if v > val or (v == val and y < prev):
                            val, prev = v, y
                slot = entries.get(Z)
                if slot is None:
                    slot = entries[Z] = {}
                    nxt.append(Z)
                slot[x] = (val, prev)
                states += 1
                if states > max_states:
                    raise ResourceError(f"more than {max_states} bump states")
                if val > best_val:
                    best_val, best_state = val, (Z, x)
        layer = nxt
    return BumpResult(max(best_val, 0), states, BumpTable(entries, best_state))


def reconstruct_extension(poset: Poset, table: BumpTable) -> list:
    """A linear extension with as many bumps as the table's best state.

    Backtracks the argmax chain, then inserts every remaining element
    directly after its last predecessor already placed (or at the front),
    which never destroys a bump.
    """
    Y, x = table.best
    order = []
    while x != -1:
        order.append(x)
        _, prev = table.entries[Y][x]
        Y &= ~(1 << x)
        x = prev
    order.reverse()
    target = sum(1 for a, b in zip(order, order[1:]) if poset.less(a, b))
    placed = bitset.from_iter(order)
    for z in range(poset.n):
        if placed >> z & 1:
            continue
        pos = 0
        for i, y in enumerate(order):
            if poset.less(y, z):
                pos = i + 1
        order.insert(pos, z)
        placed |= 1 << z
    bumps = len(order) - 1 - count_jumps(poset, order) if order else 0
    if bumps < target:
        raise InvariantError(f"reconstruction realised {bumps} bumps, table says {target}")
    return order


def _result(poset, bump, with_witness, algorithm, stats=None):
    n = poset.n
    witness = reconstruct_extension(poset, bump.table) if with_witness else None
    if n == 0:
        return JumpResult(0, 0, witness, bump.states, algorithm, stats)
    return JumpResult(n - 1 - bump.bump, bump.bump, witness, bump.states, algorithm, stats)


def jump_number_naive(poset: Poset, witness: bool = True,
                      max_states: int = DEFAULT_MAX_STATES) -> JumpResult:
    """Bump recursion over every downset."""
    return _result(poset, bump_dp(poset, None, max_states), witness, "naive")


def jn_admissible(poset: Poset, leftover: VertexSet, limit: int) -> Admissible:
    """Sets with at most ``limit`` elements of ``leftover`` that are closed
    downward except possibly for missing ``leftover`` elements."""
    need = [b & ~leftover for b in poset.below]

    def admissible(Z):
        if bitset.size(Z & leftover) > limit:
            return False
        for y in bitset.members(Z):
            if need[y] & ~Z:
                return False
        return True

    return admissible


def jump_number_jn(poset: Poset, witness: bool = True,
                   max_states: int = DEFAULT_MAX_STATES) -> JumpResult:
    """Bump recursion restricted by a canonical matching and triplet packing.

    With ``t`` triplets and leftover antichain part ``A'``, at most ``t``
    elements of ``A'`` can sit in non-trivial chains of an optimal
    extension, so only sets holding at most ``t`` of them are explored.
    With no triplets ``A'`` is the whole antichain and is skipped entirely.
    """
    M = canonicalize(poset, max_matching_comparability(poset))
    A = poset.ground & ~M.matched
    triplets, anchors = pack_triplets(poset, M, A, JN)
    leftover = A & ~anchors
    stats = PackingStats(poset.n, len(M), len(triplets))
    admissible = jn_admissible(poset, leftover, len(triplets))
    return _result(poset, bump_dp(poset, admissible, max_states), witness, "jn", stats)
