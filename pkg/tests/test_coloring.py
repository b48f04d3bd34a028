import random

import pytest
from hypothesis import given

from modwidth import oracles
from modwidth.coloring import (
    chromatic_number,
    chromatic_of_substitution,
    color_cover,
    coloring_witness,
    heaviest_clique,
    substitution_problem,
)
from modwidth.gen import cycle, grotzsch, path, petersen, random_graph
from modwidth.graph import Graph, substitute
from modwidth.mdtree import modular_decomposition
from modwidth.partition import max_weighted_partition
from modwidth.validate import coloring_problem

from strategies import graphs

K = Graph.complete

# quotient where a clique child borrows colors from two different classes
BULL_LIKE = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (2, 3), (3, 4)])


@pytest.mark.parametrize(
    "quotient, chis, expected",
    [
        (K(2), [1, 1], 2),
        (Graph.empty(2), [3, 5], 5),
        (path(3), [2, 1, 3], 4),
        (BULL_LIKE, [1, 2, 1, 1, 1], 3),
    ],
)
def test_substitution_examples(quotient, chis, expected):
    assert chromatic_of_substitution(quotient, chis) == expected
    assert chromatic_of_substitution(quotient, chis, fast=True) == expected


def test_partition_value_overshoots_on_bull_like_quotient():
    # the partition model is only an upper bound; brute force confirms 3
    assert -max_weighted_partition(substitution_problem(BULL_LIKE, [1, 2, 1, 1, 1]))[0] == 4
    blown = substitute(BULL_LIKE, [K(1), K(2), K(1), K(1), K(1)])
    assert oracles.brute_chromatic(blown) == 3


def test_cover_is_consistent():
    chi, cover = color_cover(BULL_LIKE, [1, 2, 1, 1, 1])
    assert sum(m for _, m in cover) == chi
    for s, _ in cover:
        assert BULL_LIKE.is_independent(s)
    for i, need in enumerate([1, 2, 1, 1, 1]):
        assert sum(m for s, m in cover if s >> i & 1) >= need


def test_argument_checks():
    with pytest.raises(ValueError):
        chromatic_of_substitution(K(3), [1, 1])
    with pytest.raises(ValueError):
        chromatic_of_substitution(K(2), [0, 1])


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle(5), 3),
        (petersen(), 3),
        (substitute(cycle(5), [K(2)] * 5), 5),
        (grotzsch(), 4),
        (K(1), 1),
        (Graph.empty(6), 1),
    ],
)
def test_chromatic_examples(g, expected):
    assert chromatic_number(g) == expected
    w = coloring_witness(g)
    assert coloring_problem(g, w.colors, expected) is None


def test_witness_extremes():
    assert len(set(coloring_witness(K(3)).colors)) == 3
    assert coloring_witness(Graph.empty(5)).count == 1


@given(graphs(max_n=9))
def test_matches_oracle(g):
    chi = chromatic_number(g)
    assert chi == oracles.brute_chromatic(g)
    assert coloring_problem(g, coloring_witness(g).colors, chi) is None


@pytest.mark.parametrize("seed", range(25))
def test_sandwich_at_every_node(seed):
    rng = random.Random(seed)
    q = random_graph(rng.randint(2, 6), 0.5, rng)
    chis = [rng.randint(1, 4) for _ in range(q.n)]
    chi = chromatic_of_substitution(q, chis)
    assert max(chis) <= chi <= sum(chis)
    assert heaviest_clique(q, chis) <= chi


@pytest.mark.parametrize("seed", range(25))
def test_replacement_by_cliques(seed):
    rng = random.Random(500 + seed)
    q = random_graph(rng.randint(2, 4), 0.5, rng)
    parts = [random_graph(rng.randint(1, 3), 0.5, rng) for _ in range(q.n)]
    chis = [oracles.brute_chromatic(p) for p in parts]
    assert oracles.brute_chromatic(substitute(q, parts)) == oracles.brute_chromatic(
        substitute(q, [K(c) for c in chis])
    )
    assert chromatic_number(substitute(q, parts)) == chromatic_of_substitution(q, chis)


def test_explicit_tree_is_accepted():
    g = petersen()
    assert chromatic_number(g, modular_decomposition(g)) == 3


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        chromatic_number(Graph.empty(0))
