"""
Counting linear extensions
==========================

Three counters on the same two-dimensional posets, from the plain
downset recursion to the matching-and-packing variant.
"""

import math
import time

from posetcount import Permutation, poset_from_permutation
from posetcount.estimate import estimate_resources
from posetcount.instances import LinearEngine, random_permutation
from posetcount.linext import count_le_2d, count_le_2d_star, count_le_dp, plan_2d_star

# A permutation defines a poset: i precedes j when i < j and v_i < v_j.
perm = Permutation((2, 1, 4, 3))
p = poset_from_permutation(perm)
print("relations of 2 1 4 3:", p.relations())

# Two disjoint 2-chains: choose the interleaving of {0,1} and {2,3} freely
# inside the constraint that both bottoms come first.
print("linear extensions:", count_le_dp(p).count)

# The reversal is an antichain, so every ordering counts.
n = 12
anti = poset_from_permutation(Permutation.reversal(n))
r = count_le_2d_star(anti)
print(f"antichain of {n}: {r.count} (= {n}! is {r.count == math.factorial(n)}), "
      f"route {r.route}, states {r.states_visited}")

# On random permutations all three counters agree; the state counts differ.
print()
print(f"{'n':>3} {'count':>22} {'dp':>8} {'2d':>8} {'2d*':>8}  route")
for n in (10, 14, 18, 22):
    q = poset_from_permutation(random_permutation(n, seed=n))
    a, b, c = count_le_dp(q), count_le_2d(q), count_le_2d_star(q)
    assert a.count == b.count == c.count
    print(f"{n:>3} {a.count:>22} {a.states_visited:>8} {b.states_visited:>8} "
          f"{c.states_visited:>8}  {c.route}")

# Random permutations have long increasing runs, so the matching covers
# two thirds of the elements and the counter short-circuits.  A reversal
# with a few transpositions is mostly antichain, which is where the
# transformed poset pays off.
def nearly_reversed(n, swaps, seed):
    rng = LinearEngine(seed)
    values = list(range(n, 0, -1))
    for _ in range(swaps):
        i, j = rng.below(n), rng.below(n)
        values[i], values[j] = values[j], values[i]
    return Permutation(tuple(values))


# Estimate first: the plain DP only runs when its table is small.
print()
print(f"{'n':>3} {'count':>36} {'dp states':>10} {'2d* states':>11}  route")
for n in (13, 16, 22, 30):
    perm = nearly_reversed(n, 4, seed=n)
    q = poset_from_permutation(perm)
    c = count_le_2d_star(q)
    est = estimate_resources(perm)
    if est.downsets < 100_000:
        assert count_le_dp(q).count == c.count
    print(f"{n:>3} {c.count:>36} {est.downsets:>10} {c.states_visited:>11}  {c.route}")

# The plan shows what the packing stage measured before the DP ran.
q = poset_from_permutation(nearly_reversed(30, 4, seed=30))
plan = plan_2d_star(q)
s = plan.stats
print()
print(f"n=30 plan: m={s.m} t={s.t} q={s.q} alpha={s.alpha} beta={s.beta} gamma={s.gamma}")
print("class sizes:", plan.partition.class_sizes, " strategy:", plan.strategy.value)

start = time.perf_counter()
print("count:", count_le_2d_star(q).count, f"({time.perf_counter() - start:.3f}s)")
