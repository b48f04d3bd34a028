import random

import pytest

from modwidth.errors import CapacityError
from modwidth.partition import WeightedPartitionProblem, fast_partition_value, max_weighted_partition


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_value(problem):
    best = None
    for part in set_partitions(list(range(problem.size))):
        if len(part) > problem.k:
            continue
        total = sum(problem.cost[sum(1 << v for v in block)] for block in part)
        best = total if best is None else max(best, total)
    return best


def random_problem(rng, size, k=None, bound=6):
    cost = [0] + [rng.randint(-bound, bound) for _ in range((1 << size) - 1)]
    return WeightedPartitionProblem(size, k or rng.randint(1, size), tuple(cost))


def test_bell_number_sanity():
    assert sum(1 for _ in set_partitions(list(range(5)))) == 52


def test_single_element():
    value, blocks = max_weighted_partition(WeightedPartitionProblem(1, 3, (0, 5)))
    assert (value, blocks) == (5, [(0,)])


def test_split_beats_pooled_block():
    p = WeightedPartitionProblem(2, 2, (0, -1, -1, -3))
    assert max_weighted_partition(p) == (-2, [(0,), (1,)])
    assert fast_partition_value(p) == -2


def test_block_limit_forces_pooling():
    p = WeightedPartitionProblem(2, 1, (0, 5, 5, -3))
    assert max_weighted_partition(p) == (-3, [(0, 1)])


def test_empty_ground_set():
    assert max_weighted_partition(WeightedPartitionProblem(0, 1, (0,))) == (0, [])


@pytest.mark.parametrize("seed", range(60))
def test_dp_matches_enumeration(seed):
    rng = random.Random(seed)
    p = random_problem(rng, rng.randint(1, 6))
    value, blocks = max_weighted_partition(p)
    assert value == brute_value(p)
    # the returned blocks realise the value and partition the ground set
    assert sorted(v for b in blocks for v in b) == list(range(p.size))
    assert len(blocks) <= p.k
    assert sum(p.cost[sum(1 << v for v in b)] for b in blocks) == value


@pytest.mark.parametrize("seed", range(40))
def test_fast_path_matches_dp(seed):
    rng = random.Random(1000 + seed)
    p = random_problem(rng, rng.randint(1, 7), bound=rng.choice([1, 3, 9]))
    assert fast_partition_value(p) == max_weighted_partition(p)[0]


def test_ties_prefer_lexicographically_small_blocks():
    # every partition of 3 elements into singletons or pairs scores 0
    p = WeightedPartitionProblem(3, 3, (0,) * 8)
    assert max_weighted_partition(p) == (0, [(0, 1, 2)])


def test_capacity_and_validation():
    with pytest.raises(CapacityError):
        max_weighted_partition(WeightedPartitionProblem(3, 1, (0,) * 8), limit=2)
    with pytest.raises(ValueError):
        WeightedPartitionProblem(2, 0, (0,) * 4)
    with pytest.raises(ValueError):
        WeightedPartitionProblem(2, 1, (0,) * 3)
