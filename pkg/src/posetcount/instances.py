"""Instance files and a reproducible instance generator.

Permutation file
    Optional ``#`` comment lines, then whitespace-separated integers that
    form a permutation of ``1..n``.

Edge-list file
    Header ``n m``, then ``m`` lines ``u v`` meaning ``u`` precedes ``v``,
    with ``1 <= u, v <= n``.  ``#`` comments are allowed anywhere.

Files are 1-indexed; everything in memory is 0-indexed.

The generator uses a 64-bit linear congruential engine (Knuth's MMIX
constants) so any implementation can reproduce instances exactly::

    state = (state * 6364136223846793005 + 1442695040888963407) mod 2**64
    output = state >> 32                      # 32-bit draw

A bounded draw ``below(k)`` is ``(output * k) >> 32``; a unit draw is
``output / 2**32``.  The initial state is the seed reduced mod 2**64.
Permutations are a Fisher-Yates shuffle of ``1..n`` (i from n-1 down to 1,
swap i with below(i+1)).  DAGs draw each pair ``i < j`` (lexicographic)
with probability ``density``, relabel elements by a shuffled permutation,
and emit the transitive closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import CycleError, FormatError
from .poset import Permutation, Poset, build_from_pairs, poset_from_permutation

PERMUTATION = "permutation"
EDGELIST = "edgelist"


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    payload: Union[Permutation, tuple]  # Permutation, or (n, pairs) 0-indexed

    @property
    def n(self) -> int:
        if self.kind == PERMUTATION:
            return len(self.payload)
        return self.payload[0]

    def poset(self) -> Poset:
        if self.kind == PERMUTATION:
            return poset_from_permutation(self.payload)
        n, pairs = self.payload
        return build_from_pairs(n, pairs)


def _content_lines(text: str) -> list:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"non-integer token in {what}: {exc}") from None


def parse_permutation(text: str) -> InstanceFile:
    values = _ints(" ".join(_content_lines(text)).split(), "permutation")
    if not values:
        raise FormatError("permutation file holds no values")
    try:
        return InstanceFile(PERMUTATION, Permutation(tuple(values)))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_edgelist(text: str) -> InstanceFile:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge-list file")
    header = _ints(lines[0].split(), "header")
    if len(header) != 2:
        raise FormatError("edge-list header must be 'n m'")
    n, m = header
    if n < 0 or m < 0:
        raise FormatError("negative size in header")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} relations, found {len(body)}")
    pairs = []
    for line in body:
        uv = _ints(line.split(), "relation")
        if len(uv) != 2:
            raise FormatError(f"relation line must be 'u v': {line!r}")
        u, v = uv
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"relation ({u}, {v}) out of range 1..{n}")
        pairs.append((u - 1, v - 1))
    try:
        build_from_pairs(n, pairs)
    except CycleError as exc:
        raise FormatError(f"relations are cyclic: {exc}") from None
    return InstanceFile(EDGELIST, (n, tuple(pairs)))


def _looks_like_edgelist(text: str) -> bool:
    lines = _content_lines(text)
    if not lines:
        return False
    rows = [line.split() for line in lines]
    if any(len(r) != 2 for r in rows):
        return False
    try:
        return int(rows[0][1]) == len(rows) - 1
    except ValueError:
        return False


def parse_instance(text: str, kind: str = "auto") -> InstanceFile:
    """Parse instance text; ``auto`` tries the edge-list shape first."""
    if kind == "auto":
        if _looks_like_edgelist(text):
            try:
                return parse_edgelist(text)
            except FormatError:
                pass
        return parse_permutation(text)
    if kind == PERMUTATION:
        return parse_permutation(text)
    if kind == EDGELIST:
        return parse_edgelist(text)
    raise ValueError(f"unknown instance kind {kind!r}")


def render(instance: InstanceFile) -> str:
    if instance.kind == PERMUTATION:
        return " ".join(str(v) for v in instance.payload.values) + "\n"
    n, pairs = instance.payload
    lines = [f"{n} {len(pairs)}"] + [f"{u + 1} {v + 1}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def edgelist_of(poset: Poset) -> InstanceFile:
    return InstanceFile(EDGELIST, (poset.n, tuple(poset.relations())))


class LinearEngine:
    """64-bit LCG with MMIX constants; see the module docstring."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next32(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self.state >> 32

    def below(self, k: int) -> int:
        return (self.next32() * k) >> 32

    def unit(self) -> float:
        return self.next32() / 2.0 ** 32


def _shuffle(values: list, rng: LinearEngine) -> list:
    for i in range(len(values) - 1, 0, -1):
        j = rng.below(i + 1)
        values[i], values[j] = values[j], values[i]
    return values


def random_permutation(n: int, seed: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Permutation(tuple(_shuffle(list(range(1, n + 1)), LinearEngine(seed))))


def random_dag(n: int, seed: int, density: float = 0.3) -> Poset:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = LinearEngine(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.unit() < density]
    label = _shuffle(list(range(n)), rng)
    return build_from_pairs(n, [(label[i], label[j]) for i, j in pairs])


def generate(kind: str, n: int, seed: int, density: float = 0.3) -> InstanceFile:
    if kind == PERMUTATION:
        return InstanceFile(PERMUTATION, random_permutation(n, seed))
    if kind in ("dag", EDGELIST):
        return edgelist_of(random_dag(n, seed, density))
    raise ValueError(f"unknown generator kind {kind!r}")
