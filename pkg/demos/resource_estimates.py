"""
Predicting memory before counting
=================================

The counting recursion stores one entry per downset, and the downsets of
a permutation poset can be counted in quadratic time.  So the table size
is known before any DP runs.
"""

from posetcount import Permutation, poset_from_permutation
from posetcount.estimate import count_antichains_2d, estimate_resources
from posetcount.instances import random_permutation
from posetcount.linext import count_le_2d_star

for perm in (Permutation.identity(10), Permutation.reversal(10), Permutation((2, 1, 4, 3))):
    est = estimate_resources(perm)
    print(perm.values, "downsets", est.downsets, "transformed", est.downsets_transformed,
          "strategy", est.strategy.value)

# The prediction is exact: it matches the states the counter visits.
print()
for n in (20, 30, 40):
    perm = random_permutation(n, seed=3 * n)
    est = estimate_resources(perm)
    line = f"n={n}: predicted {est.predicted_states}, tau={est.tau:.4f}, pi={est.pi:.4f}"
    if est.predicted_states < 2_000_000:
        actual = count_le_2d_star(poset_from_permutation(perm)).states_visited
        line += f", visited {actual}"
    print(line)

# Large random instances stay cheap to estimate.
perm = random_permutation(400, seed=1)
print()
print("n=400 downsets:", count_antichains_2d(perm))
