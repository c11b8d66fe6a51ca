import itertools
from fractions import Fraction

import networkx as nx
import pytest

from posetcount import bitset
from posetcount.errors import InvariantError
from posetcount.matching import (JN, LE, Matching, PackingStats, Triplet, _blossom,
                                 bipartite_max_matching, canonical_max_matching, canonicalize,
                                 max_matching_comparability, pack_quartets, pack_triplets,
                                 separated_witness)
from posetcount.poset import (Permutation, antichain, build_from_pairs, chain, is_antichain,
                              neighborhood, poset_from_permutation)

from conftest import dag_posets, perm_posets

S = bitset.from_iter


def exhaustive_matching_size(poset):
    edges = poset.relations()
    best = 0
    for k in range(len(edges), 0, -1):
        if k <= best:
            break
        for combo in itertools.combinations(edges, k):
            used = [v for e in combo for v in e]
            if len(set(used)) == len(used):
                return k
    return best


def test_matching_examples(two_plus_two):
    assert len(max_matching_comparability(antichain(5))) == 0
    M = max_matching_comparability(chain(4))
    assert len(M) == 2 and M.matched == S(range(4))
    assert len(max_matching_comparability(two_plus_two)) == 2


def test_matching_size_against_exhaustive_search():
    for _, p in perm_posets(60, 1, 8):
        M = max_matching_comparability(p)
        M.validate(p)
        assert len(M) == exhaustive_matching_size(p)


def test_blossom_against_networkx_on_general_graphs():
    import random
    rng = random.Random(7)
    for trial in range(150):
        n = rng.randint(1, 14)
        g = nx.gnp_random_graph(n, rng.choice([0.15, 0.3, 0.5]), seed=trial)
        adj = [sorted(g.neighbors(v)) for v in range(n)]
        mate = _blossom(n, adj)
        for v, u in enumerate(mate):
            if u != -1:
                assert mate[u] == v and g.has_edge(u, v)
        ours = sum(1 for u in mate if u != -1) // 2
        assert ours == len(nx.max_weight_matching(g, maxcardinality=True))


def test_matching_size_against_networkx_on_comparability_graphs():
    for p in dag_posets(80, 5, 16):
        g = nx.Graph()
        g.add_nodes_from(range(p.n))
        g.add_edges_from(p.relations())
        assert len(max_matching_comparability(p)) == len(nx.max_weight_matching(g, maxcardinality=True))


def test_unmatched_vertices_form_antichain():
    for p in dag_posets(60, 1, 14):
        M = max_matching_comparability(p)
        assert is_antichain(p, p.ground & ~M.matched)


def test_bipartite_examples():
    assert bipartite_max_matching(3, 3, lambda l, r: False) == []
    assert len(bipartite_max_matching(4, 4, lambda l, r: True)) == 4
    adj = {(0, 0), (0, 1), (1, 0)}
    assert len(bipartite_max_matching(2, 2, lambda l, r: (l, r) in adj)) == 2


def test_bipartite_against_networkx():
    import random
    rng = random.Random(3)
    for _ in range(100):
        a, b = rng.randint(0, 8), rng.randint(0, 8)
        edges = {(l, r) for l in range(a) for r in range(b) if rng.random() < 0.3}
        pairs = bipartite_max_matching(a, b, lambda l, r: (l, r) in edges)
        assert all(p in edges for p in pairs)
        assert len({l for l, _ in pairs}) == len({r for _, r in pairs}) == len(pairs)
        g = nx.Graph()
        g.add_nodes_from([("L", i) for i in range(a)] + [("R", j) for j in range(b)])
        g.add_edges_from((("L", l), ("R", r)) for l, r in edges)
        assert len(pairs) == len(nx.max_weight_matching(g, maxcardinality=True))


def test_canonicalize_swaps_separated_edge():
    p = chain(3)
    M = canonicalize(p, Matching(((0, 2),)))
    assert M.edges == ((1, 2),)


def test_canonicalize_fixpoint_and_rejects_non_maximum():
    p = chain(4)
    M = Matching(((0, 1), (2, 3)))
    assert canonicalize(p, M) == M
    with pytest.raises(InvariantError):
        canonicalize(p, Matching(((0, 1),)))


def test_canonical_matchings_have_no_separated_edges():
    for _, p in perm_posets(1000, 2, 16):
        M0 = max_matching_comparability(p)
        M = canonicalize(p, M0)
        M.validate(p)
        assert len(M) == len(M0)
        A = p.ground & ~M.matched
        assert all(separated_witness(p, e, A) == -1 for e in M.edges)


def test_canonical_edges_above_or_below_meet_one_antichain_vertex():
    for _, p in perm_posets(300, 4, 16):
        M = canonical_max_matching(p)
        A = p.ground & ~M.matched
        for x, y in M.edges:
            nx_, ny = neighborhood(p, x) & A, neighborhood(p, y) & A
            both_above = (p.below[x] & A) and (p.below[y] & A)
            both_below = (p.above[x] & A) and (p.above[y] & A)
            if both_above or both_below:
                assert nx_ == ny and bitset.size(nx_) == 1


def test_triplet_examples():
    p = chain(3)
    M = Matching(((0, 1),))
    T, used = pack_triplets(p, M, S([2]))
    assert T == [Triplet(2, (0, 1))] and used == S([2])
    assert pack_triplets(p, M, 0) == ([], 0)


def test_quartet_example():
    p = chain(4)
    T = [Triplet(2, (0, 1))]
    Q, used = pack_quartets(p, T, S([3]))
    assert len(Q) == 1 and Q[0].anchor == 3 and used == S([3])
    assert pack_quartets(p, [], S([3])) == ([], 0)


def test_modes_agree_under_transitivity():
    for p in dag_posets(100, 2, 14):
        M = canonical_max_matching(p)
        A = p.ground & ~M.matched
        assert pack_triplets(p, M, A, LE) == pack_triplets(p, M, A, JN)


def test_packing_structure():
    for _, p in perm_posets(400, 2, 18):
        M = canonical_max_matching(p)
        A = p.ground & ~M.matched
        T, used3 = pack_triplets(p, M, A)
        Q, used4 = pack_quartets(p, T, A & ~used3)
        stats = PackingStats(p.n, len(M), len(T), len(Q))
        assert stats.gamma <= stats.beta <= stats.alpha
        leftover = A & ~used3 & ~used4
        assert bitset.size(leftover) == stats.leftover
        in_triplets = {e for t in T for e in [t.pair]}
        for e in M.edges:
            if e not in in_triplets:
                assert not (neighborhood(p, e[0]) | neighborhood(p, e[1])) & leftover
        in_quartets = {q.triplet for q in Q}
        for t in T:
            assert connected(p, t.vertices)
            if t not in in_quartets:
                assert not any(neighborhood(p, v) & leftover for v in t.vertices)
        for q in Q:
            assert connected(p, q.vertices)


def connected(p, vertices):
    vs = set(vertices)
    seen, stack = {vertices[0]}, [vertices[0]]
    while stack:
        v = stack.pop()
        for u in vs - seen:
            if p.comparable(u, v):
                seen.add(u)
                stack.append(u)
    return seen == vs


def test_packing_stats_invariants():
    with pytest.raises(InvariantError):
        PackingStats(4, 1, 2)
    with pytest.raises(InvariantError):
        PackingStats(4, 2, 1)
    s = PackingStats(12, 2, 2, 1)
    assert (s.alpha, s.beta, s.gamma, s.leftover) == (Fraction(1, 6), Fraction(1, 6), Fraction(1, 12), 5)
