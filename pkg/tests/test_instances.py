import pytest
from hypothesis import given, settings, strategies as st

from posetcount.errors import FormatError
from posetcount.instances import (EDGELIST, PERMUTATION, LinearEngine, edgelist_of, generate,
                                  parse_edgelist, parse_instance, parse_permutation,
                                  random_dag, random_permutation, render)
from posetcount.poset import Permutation, antichain, poset_from_permutation


def test_engine_first_draw():
    # state 0 -> increment; the first draw is its high half
    assert LinearEngine(0).next32() == 1442695040888963407 >> 32


def test_engine_ranges():
    rng = LinearEngine(123)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    assert all(0.0 <= rng.unit() < 1.0 for _ in range(1000))


def test_generator_is_deterministic():
    assert random_permutation(30, 5) == random_permutation(30, 5)
    assert random_permutation(30, 5) != random_permutation(30, 6)
    assert random_dag(12, 9, 0.4) == random_dag(12, 9, 0.4)
    assert render(generate("dag", 10, 3)) == render(generate("dag", 10, 3))


def test_generator_pinned_values():
    assert random_permutation(8, 42).values == (7, 8, 1, 6, 4, 3, 2, 5)
    assert random_permutation(8, 0).values == (5, 7, 6, 2, 3, 4, 8, 1)


def test_density_extremes():
    assert random_dag(9, 1, 0.0) == antichain(9)
    full = random_dag(9, 1, 1.0)
    assert full.num_relations() == 9 * 8 // 2


def test_generator_rejects_bad_arguments():
    with pytest.raises(ValueError):
        random_permutation(0, 1)
    with pytest.raises(ValueError):
        random_dag(5, 1, 1.5)
    with pytest.raises(ValueError):
        generate("tree", 5, 1)


def test_permutation_round_trip():
    for seed in range(20):
        inst = generate(PERMUTATION, 1 + seed, seed)
        back = parse_instance(render(inst))
        assert back == inst


def test_edgelist_round_trip():
    for seed in range(20):
        inst = generate("dag", 1 + seed % 12, seed, 0.35)
        back = parse_instance(render(inst), "edgelist")
        assert back.poset() == inst.poset()


def test_comments_and_whitespace():
    inst = parse_permutation("# a comment\n3 1\n  2 # trailing\n")
    assert inst.payload == Permutation((3, 1, 2))
    inst = parse_edgelist("# header next\n3 2\n1 2 # first\n2 3\n")
    assert inst.poset().less(0, 2)


def test_auto_detection():
    assert parse_instance("2 1 4 3\n").kind == PERMUTATION
    assert parse_instance("3 2\n1 2\n2 3\n").kind == EDGELIST
    assert parse_instance("2 1\n").kind == PERMUTATION  # no relation line follows
    assert parse_instance("2 1\n1 2\n").kind == EDGELIST


@pytest.mark.parametrize("text", ["", "1 2 2", "0 1", "1 x 3", "1 3"])
def test_bad_permutations(text):
    with pytest.raises(FormatError):
        parse_permutation(text)


@pytest.mark.parametrize("text", [
    "", "3\n", "3 2\n1 2\n", "3 1\n1 4\n", "3 1\n1 2 3\n", "2 2\n1 2\n2 1\n", "2 1\n1 1\n",
    "-1 0\n", "a b\n",
])
def test_bad_edgelists(text):
    with pytest.raises(FormatError):
        parse_edgelist(text)


def test_unknown_kind():
    with pytest.raises(ValueError):
        parse_instance("1", "matrix")


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(1, 12)))
def test_edgelist_of_permutation_poset(values):
    p = poset_from_permutation(Permutation(tuple(values)))
    inst = edgelist_of(p)
    assert parse_edgelist(render(inst)).poset() == p
