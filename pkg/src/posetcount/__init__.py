"""Exact counting of linear extensions and minimum jump numbers of posets.

Two-dimensional posets are given as permutations; the accelerated
counters shrink the downset lattice by collapsing neighbourhood classes
of an antichain into chains.
"""

from .bitset import VertexSet
from .bounds import EXPRESSIONS, Certificate, certify_bound, evaluate_bound
from .errors import (AlgorithmMismatch, CycleError, DepthExceeded, DomainError, FormatError,
                     InvariantError, PosetError, ResourceError, SizeError)
from .estimate import count_antichains_2d, embed_transformed, estimate_resources
from .jump import bump_dp, jump_number_jn, jump_number_naive, reconstruct_extension
from .linext import (NeighborhoodPartition, Strategy, TransformedPoset, build_virtual_poset,
                     count_le_2d, count_le_2d_star, count_le_dp, partition_by_neighborhood,
                     select_strategy)
from .matching import (Matching, PackingStats, Quartet, Triplet, bipartite_max_matching,
                       canonicalize, max_matching_comparability, pack_quartets, pack_triplets)
from .poset import (Permutation, Poset, brute_force_jump, brute_force_le, build_from_pairs,
                    is_downset, maxima, neighborhood, poset_from_permutation)

__version__ = "0.1.0"
