import itertools

import pytest
from hypothesis import given

from modwidth import oracles
from modwidth.gen import cycle, gen_bounded_mw, gen_subdivided_star, path, petersen
from modwidth.graph import Graph, iter_bits
from modwidth.mdtree import (
    Join,
    Leaf,
    Prime,
    Union,
    evaluate,
    from_dict,
    is_module,
    is_prime_graph,
    leaves,
    modular_decomposition,
    modular_width,
    neighborhood_diversity,
    normalize,
    postorder,
    signature,
    to_dict,
    to_dot,
)

from strategies import graphs


def width(g):
    return modular_width(modular_decomposition(g))


def threshold_graph(n):
    # add vertices alternately isolated and dominating: tree depth ~ n
    edges = [(u, v) for v in range(n) if v % 2 for u in range(v)]
    return Graph.from_edges(n, edges)


@pytest.mark.parametrize(
    "g, expected",
    [(path(4), 4), (cycle(5), 5), (Graph.complete(5), 0), (Graph.empty(4), 0), (petersen(), 10), (Graph.empty(1), 0)],
)
def test_known_widths(g, expected):
    assert width(g) == expected


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_subdivided_star_is_prime(k):
    g = gen_subdivided_star(k)
    assert width(g) == 2 * k + 1


def test_p4_tree_shape():
    tree = modular_decomposition(path(4))
    assert isinstance(tree, Prime)
    assert all(isinstance(c, Leaf) for c in tree.children)
    assert sorted(tree.quotient.degree(v) for v in range(4)) == [1, 1, 2, 2]


def test_cograph_tree_alternates():
    # (K1 + K1) join K1 = P3
    tree = modular_decomposition(path(3))
    assert isinstance(tree, Join)
    kinds = {type(c) for c in tree.children}
    assert kinds == {Leaf, Union}


def test_is_module():
    g = path(4)
    assert is_module(g, [0, 1, 2, 3])
    assert is_module(g, [2])
    assert not is_module(g, [1, 2])
    with pytest.raises(ValueError):
        is_module(g, [])


def test_every_atlas_graph_matches_subset_search(atlas):
    for g in atlas:
        tree = modular_decomposition(g)
        assert evaluate(tree, g.n) == g
        assert modular_width(tree) == oracles.brute_modular_width(g)
        for node in postorder(tree):
            if isinstance(node, Prime):
                assert is_prime_graph(node.quotient)


def test_tree_nodes_are_strong_modules():
    for n in range(1, 7):
        g = gen_bounded_mw(n, 3, seed=n)
        strong = set(oracles.strong_modules(g))
        for node in postorder(modular_decomposition(g)):
            assert frozenset(iter_bits(node.mask)) in strong


@given(graphs(max_n=9))
def test_evaluation_identity(g):
    tree = modular_decomposition(g)
    assert evaluate(tree, g.n) == g
    assert sorted(leaves(tree)) == list(range(g.n))
    assert evaluate(normalize(tree), g.n) == g


@given(graphs(max_n=9))
def test_normalized_tree_has_binary_series_parallel_nodes(g):
    tree = normalize(modular_decomposition(g))
    for node in postorder(tree):
        assert not isinstance(node, (Union, Join))
        if isinstance(node, Prime) and len(node.children) == 2:
            assert node.quotient.m in (0, 1)


@given(graphs(max_n=9))
def test_width_at_most_nd(g):
    assert width(g) <= neighborhood_diversity(g)[0]


def _pairwise_twin_classes(g):
    def twins(u, v):
        return g.masks[u] & ~(1 << v) == g.masks[v] & ~(1 << u)

    classes = []
    for v in range(g.n):
        for c in classes:
            if twins(c[0], v):
                c.append(v)
                break
        else:
            classes.append([v])
    return sorted(tuple(c) for c in classes)


@given(graphs(max_n=9))
def test_nd_matches_pairwise_definition(g):
    count, part = neighborhood_diversity(g)
    assert list(part.classes) == _pairwise_twin_classes(g)
    assert count == len(part)
    for c, clique in zip(part.classes, part.is_clique):
        mask = sum(1 << v for v in c)
        assert (g.is_clique(mask) if clique else g.is_independent(mask))


def test_nd_examples():
    assert neighborhood_diversity(Graph.complete(5))[0] == 1
    assert neighborhood_diversity(cycle(5))[0] == 5
    from modwidth.gen import complete_bipartite

    assert neighborhood_diversity(complete_bipartite(3, 4))[0] == 2


def test_deep_tree_is_handled_iteratively():
    g = threshold_graph(3000)
    tree = modular_decomposition(g)
    assert modular_width(tree) == 0
    assert len(postorder(tree)) >= 3000
    assert evaluate(tree, g.n) == g
    assert signature(from_dict(to_dict(tree))) == signature(tree)


def test_large_bounded_width_graph():
    g = gen_bounded_mw(1000, 8, seed=3)
    assert width(g) <= 8


@given(graphs(max_n=8))
def test_dict_roundtrip(g):
    tree = modular_decomposition(g)
    assert from_dict(to_dict(tree)) == tree


def test_dot_output():
    dot = to_dot(modular_decomposition(path(4)))
    assert dot.startswith("graph parse_tree {")
    assert "prime(4)" in dot


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        modular_decomposition(Graph.empty(0))


def test_prime_arity_checked():
    with pytest.raises(ValueError):
        Prime(path(4), (Leaf(0),))
