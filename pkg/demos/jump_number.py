"""
Minimum jump number
===================

A jump is an adjacent incomparable pair in a linear extension.  The
search maximises bumps (adjacent comparable pairs) instead.
"""

from posetcount import Permutation, poset_from_permutation
from posetcount.instances import random_dag
from posetcount.jump import jump_number_jn, jump_number_naive
from posetcount.poset import brute_force_jump, count_jumps

# Two disjoint 2-chains: whichever bottom comes first, the other bottom
# must precede both tops, so only one bump fits.
p = poset_from_permutation(Permutation((2, 1, 4, 3)))
r = jump_number_naive(p)
print("2 1 4 3 -> jump number", r.jump_number, "witness", r.witness)

# Brute force agrees on small posets.
for seed in range(5):
    d = random_dag(8, seed, density=0.3)
    print(f"seed {seed}: brute {brute_force_jump(d)}, naive {jump_number_naive(d).jump_number}, "
          f"jn {jump_number_jn(d).jump_number}")

# The restricted search skips sets holding too many leftover antichain
# elements; on sparse posets that cuts the state count.
print()
print(f"{'n':>3} {'jump':>5} {'naive states':>13} {'jn states':>10}")
for n in (10, 13, 16):
    d = random_dag(n, seed=n, density=0.15)
    a, b = jump_number_naive(d, witness=False), jump_number_jn(d)
    assert a.jump_number == b.jump_number == count_jumps(d, b.witness)
    print(f"{n:>3} {b.jump_number:>5} {a.states_visited:>13} {b.states_visited:>10}")
