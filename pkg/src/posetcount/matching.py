"""Matchings in the comparability graph and the triplet/quartet packing rounds.

All scans run in increasing element (or edge) index order, so every
routine here is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bitset
from .bitset import VertexSet
from .errors import InvariantError
from .poset import Poset, is_antichain, neighborhood

LE = "LE"
JN = "JN"


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint comparability edges ``(x, y)`` with ``x`` below ``y``."""

    edges: tuple

    @property
    def matched(self) -> VertexSet:
        mask = 0
        for x, y in self.edges:
            mask |= 1 << x | 1 << y
        return mask

    def __len__(self):
        return len(self.edges)

    def validate(self, poset: Poset) -> None:
        seen = 0
        for x, y in self.edges:
            if not poset.less(x, y):
                raise InvariantError(f"edge ({x}, {y}) is not a relation x < y")
            if seen & (1 << x | 1 << y):
                raise InvariantError(f"edge ({x}, {y}) shares a vertex")
            seen |= 1 << x | 1 << y


@dataclass(frozen=True)
class Triplet:
    anchor: int
    pair: tuple

    @property
    def vertices(self) -> tuple:
        return (self.anchor,) + tuple(self.pair)


@dataclass(frozen=True)
class Quartet:
    anchor: int
    triplet: Triplet

    @property
    def vertices(self) -> tuple:
        return (self.anchor,) + self.triplet.vertices


@dataclass(frozen=True)
class PackingStats:
    """Counts of matched edges (m), triplets (t) and quartets (q) on n elements."""

    n: int
    m: int
    t: int = 0
    q: int = 0

    def __post_init__(self):
        if not (0 <= self.q <= self.t <= self.m) or 2 * self.m + self.t + self.q > self.n:
            raise InvariantError(f"inconsistent packing counts {self}")

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.m, self.n) if self.n else Fraction(0)

    @property
    def beta(self) -> Fraction:
        return Fraction(self.t, self.n) if self.n else Fraction(0)

    @property
    def gamma(self) -> Fraction:
        return Fraction(self.q, self.n) if self.n else Fraction(0)

    @property
    def leftover(self) -> int:
        """Size of A', the antichain part left after both packing rounds."""
        return self.n - 2 * self.m - self.t - self.q


def _blossom(n: int, adj: list) -> list:
    """Edmonds' maximum cardinality matching; returns the mate array."""
    mate = [-1] * n

    def find_augmenting(root):
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v, b, child, in_blossom):
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    in_blossom = [False] * n
                    mark(v, b, to, in_blossom)
                    mark(to, b, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            prev = parent[end]
            nxt = mate[prev]
            mate[end] = prev
            mate[prev] = end
            end = nxt
    return mate


def max_matching_comparability(poset: Poset) -> Matching:
    """Maximum cardinality matching of the comparability graph."""
    adj = [bitset.to_list(neighborhood(poset, x)) for x in range(poset.n)]
    mate = _blossom(poset.n, adj)
    edges = []
    for x in range(poset.n):
        y = mate[x]
        if y > x:
            edges.append((x, y) if poset.less(x, y) else (y, x))
    return Matching(tuple(edges))


def bipartite_max_matching(left_size: int, right_size: int,
                           adjacency: Callable[[int, int], bool]) -> list:
    """Maximum bipartite matching by augmenting paths.

    Left vertices are processed in index order and each tries right
    vertices in index order.  Returns sorted ``(left, right)`` pairs.
    """
    nbrs = [[r for r in range(right_size) if adjacency(l, r)] for l in range(left_size)]
    owner = [-1] * right_size

    def augment(l, visited):
        for r in nbrs[l]:
            if visited[r]:
                continue
            visited[r] = True
            if owner[r] == -1 or augment(owner[r], visited):
                owner[r] = l
                return True
        return False

    for l in range(left_size):
        augment(l, [False] * right_size)
    return sorted((l, r) for r, l in enumerate(owner) if l != -1)


def separated_witness(poset: Poset, edge: tuple, A: VertexSet) -> int:
    """Lowest x in A with edge[0] < x < edge[1], or -1."""
    between = poset.above[edge[0]] & poset.below[edge[1]] & A
    return bitset.lowest(between) if between else -1


def canonicalize(poset: Poset, M: Matching) -> Matching:
    """Swap out separated edges until none remain.

    A separated edge ``(xi, yi)`` has some unmatched ``x`` with
    ``xi < x < yi``; it is replaced by ``(x, yi)``.  Each swap raises the
    rank sum of matched vertices in any fixed linear extension, so the
    loop ends after O(n^2) swaps.
    """
    A = poset.ground & ~M.matched
    if not is_antichain(poset, A):
        raise InvariantError("unmatched vertices are not an antichain; matching is not maximum")
    edges = list(M.edges)
    changed = True
    while changed:
        changed = False
        for i, edge in enumerate(edges):
            x = separated_witness(poset, edge, A)
            if x >= 0:
                A = A & ~(1 << x) | 1 << edge[0]
                edges[i] = (x, edge[1])
                changed = True
                break
    return Matching(tuple(edges))


def _triplet_adjacent(poset: Poset, x: int, edge: tuple, mode: str) -> bool:
    xi, yi = edge
    if mode == LE:
        return poset.comparable(x, xi) or poset.comparable(x, yi)
    if mode == JN:
        return poset.less(x, yi) or poset.less(xi, x)
    raise ValueError(f"unknown mode {mode!r}")


def pack_triplets(poset: Poset, M: Matching, A: VertexSet, mode: str = LE) -> tuple:
    """Match antichain vertices to edges of M, forming triplets.

    Returns ``(triplets, matchedA)`` where ``matchedA`` is the set of
    anchors used.
    """
    left = bitset.to_list(A)
    right = list(M.edges)
    pairs = bipartite_max_matching(
        len(left), len(right), lambda l, r: _triplet_adjacent(poset, left[l], right[r], mode))
    triplets = [Triplet(left[l], right[r]) for l, r in sorted(pairs, key=lambda p: p[1])]
    return triplets, bitset.from_iter(t.anchor for t in triplets)


def pack_quartets(poset: Poset, T: list, A_unmatched: VertexSet) -> tuple:
    """Match leftover antichain vertices to triplets, forming quartets."""
    left = bitset.to_list(A_unmatched)
    masks = [bitset.from_iter(t.vertices) for t in T]
    pairs = bipartite_max_matching(
        len(left), len(T), lambda l, r: bool(neighborhood(poset, left[l]) & masks[r]))
    quartets = [Quartet(left[l], T[r]) for l, r in sorted(pairs, key=lambda p: p[1])]
    return quartets, bitset.from_iter(q.anchor for q in quartets)


def canonical_max_matching(poset: Poset) -> Matching:
    return canonicalize(poset, max_matching_comparability(poset))
