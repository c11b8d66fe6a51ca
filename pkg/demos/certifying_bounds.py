"""
Certifying the exponential bases
================================

Each bound is a closed-form function of the packing fractions.  Box
splitting with corner bounds shows it stays under a threshold on the
whole domain, or finds a box where it does not.
"""

import numpy as np

from posetcount.bounds import EXPRESSIONS, certify_bound, evaluate_bound
from posetcount.errors import DepthExceeded

sixth = (1 / 6, 1 / 6, 1 / 6)
print("tau at alpha=beta=gamma=1/6:", evaluate_bound("TAU_LE", sixth), " 6^(1/3) =", 6 ** (1 / 3))

for expr, threshold in [("TAU_LE", 1.8172), ("PI_LE", 1.8172), ("GAMMA_ZERO", 1.71),
                        ("LEMMA1_BOUND", 1.9064), ("CANONICAL_BOUND", 1.8613),
                        ("TAU_JN", 1.824), ("TAU_JN_SIMPLE", 1.8206)]:
    cert = certify_bound(expr, threshold)
    print(f"{expr:<16} < {threshold}: {cert.status:<9} boxes {cert.boxes_processed:>7}, "
          f"largest leaf bound {cert.max_corner_bound:.6f}")

# Just below the supremum the certifier finds a box where tau is too big.
# Here the centre of the very first box is the maximiser itself.
cert = certify_bound("TAU_LE", 1.8171)
print()
print("TAU_LE < 1.8171:", cert.status, "-", cert.reason)
print("  box lo", np.round(cert.offending.lo, 5), "hi", np.round(cert.offending.hi, 5))

# A tight threshold with a shallow depth cap runs out of splits instead.
try:
    certify_bound("TAU_LE", 1.81713, max_depth=10)
except DepthExceeded as exc:
    print("TAU_LE < 1.81713 at depth 10:", exc)

# A coarse grid scan agrees with the certified maxima.
expr = EXPRESSIONS["TAU_JN_ENTROPY"]
grid = np.array([(a, b) for a in np.linspace(0, 0.5, 201) for b in np.linspace(0, 1 / 3, 201)])
grid = grid[[expr.contains(p) for p in grid]]
print()
print("grid max of the entropy jump bound:", expr.value(grid).max())
