from modwidth.gen import cycle, path
from modwidth.graph import Graph
from modwidth.validate import coloring_problem, cycle_problem, path_partition_problem


def test_coloring():
    g = cycle(5)
    assert coloring_problem(g, [0, 1, 0, 1, 2], 3) is None
    assert "monochromatic" in coloring_problem(g, [0, 1, 0, 1, 0])
    assert "expected" in coloring_problem(g, [0, 1, 0, 1, 2], 4)
    assert coloring_problem(g, [0, 1]) is not None


def test_path_partition():
    g = path(4)
    assert path_partition_problem(g, [[0, 1, 2, 3]], 1) is None
    assert path_partition_problem(g, [[0, 1], [3, 2]], 2) is None
    assert "not adjacent" in path_partition_problem(g, [[0, 2], [1, 3]])
    assert "twice" in path_partition_problem(g, [[0, 1], [1, 2, 3]])
    assert "covers" in path_partition_problem(g, [[0, 1]])
    assert "empty" in path_partition_problem(g, [[], [0, 1, 2, 3]])


def test_cycle():
    g = cycle(4)
    assert cycle_problem(g, [0, 1, 2, 3]) is None
    assert cycle_problem(g, [0, 2, 1, 3]) is not None
    assert cycle_problem(g, [0, 1, 2]) is not None
    assert cycle_problem(Graph.complete(2), [0, 1]) is not None
