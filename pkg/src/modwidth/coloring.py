"""Chromatic number by dynamic programming over the decomposition tree.

The record of a node is just its chromatic number. At a substitution node
``Q(G_1, ..., G_n)`` every child may be replaced by a clique of size
``chi(G_i)`` without changing the answer. Coloring that blow-up means
choosing independent sets of ``Q`` with multiplicities so that vertex ``i``
is covered ``chi(G_i)`` times, using as few sets in total as possible.

Partitioning ``Q`` into independent classes, each paying ``max chi(G_i)``
fresh colors, is a Max Weighted Partition and always gives a valid
coloring, but not always an optimal one: in the bull-like quotient with
edges 0-1, 0-2, 0-3, 2-3, 3-4 and demands (1, 2, 1, 1, 1), vertex 1 can
borrow one color from 2 and one from 3, for 3 colors where every partition
pays 4. The partition value is therefore the upper end of the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InternalError
from .graph import Graph, bits_to_mask, iter_bits
from .ilp import GE, LE, IlpInstance, feasible
from .mdtree import Leaf, Node, modular_decomposition, normalize, postorder, quotient_of
from .partition import WeightedPartitionProblem, fast_partition_value, max_weighted_partition


@dataclass(frozen=True)
class ColoringWitness:
    colors: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(set(self.colors))


def substitution_problem(quotient: Graph, child_chi: Sequence[int]) -> WeightedPartitionProblem:
    """Partition instance whose optimum is ``-chi(quotient(K_c1, ..., K_cn))``."""
    n = quotient.n
    if len(child_chi) != n:
        raise ValueError(f"quotient has {n} vertices but {len(child_chi)} child values were given")
    if any(c < 1 for c in child_chi):
        raise ValueError("every child chromatic number must be at least 1")
    # blocks that are not independent in the quotient can never be color classes
    sentinel = -(1 + sum(child_chi))
    cost = [0] * (1 << n)
    indep = [True] * (1 << n)
    peak = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        indep[s] = indep[rest] and not (quotient.masks[v] & rest)
        peak[s] = max(peak[rest], child_chi[v])
        cost[s] = -peak[s] if indep[s] else sentinel
    return WeightedPartitionProblem(n, n, tuple(cost))


def _independent_masks(quotient: Graph) -> list[bool]:
    n = quotient.n
    indep = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        indep[s] = indep[rest] and not (quotient.masks[low.bit_length() - 1] & rest)
    return indep


def _maximal_independent_sets(quotient: Graph) -> list[int]:
    indep = _independent_masks(quotient)
    full = quotient.full_mask
    return [
        s for s in range(1, 1 << quotient.n)
        if indep[s] and all(not indep[s | 1 << v] for v in iter_bits(full & ~s))
    ]


def heaviest_clique(quotient: Graph, child_chi: Sequence[int]) -> int:
    """Largest ``sum(child_chi[i])`` over cliques of the quotient."""
    n = quotient.n
    best = 0
    weight = [0] * (1 << n)
    clique = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        clique[s] = clique[rest] and (quotient.masks[v] & rest) == rest
        if clique[s]:
            weight[s] = weight[rest] + child_chi[v]
            best = max(best, weight[s])
    return best


def _cover_ilp(sets: list[int], child_chi: Sequence[int], total: int) -> IlpInstance:
    """Multiplicities ``x_I`` over independent sets, at most ``total`` in all,
    covering quotient vertex ``i`` at least ``child_chi[i]`` times."""
    p = len(sets)
    inst = IlpInstance(p, [0] * p, [max(child_chi)] * p, names=[f"x{s:b}" for s in sets])
    inst.add({t: 1 for t in range(p)}, LE, total)
    for i, need in enumerate(child_chi):
        inst.add({t: 1 for t, s in enumerate(sets) if s >> i & 1}, GE, need)
    return inst


def color_cover(
    quotient: Graph, child_chi: Sequence[int], fast: bool = False
) -> tuple[int, list[tuple[int, int]]]:
    """Exact ``chi(quotient(K_c1, ..., K_cn))`` with an optimal cover.

    Returns ``(chi, [(independent set mask, multiplicity), ...])``. The
    partition optimum of :func:`substitution_problem` is feasible but can
    overshoot, because a clique child may take colors from several classes.
    So it only serves as the upper end of a search whose lower end is the
    heaviest clique; in between, covers are found by integer programming.
    """
    problem = substitution_problem(quotient, child_chi)
    upper, blocks = max_weighted_partition(problem)
    upper = -upper
    if fast:
        quick = -fast_partition_value(problem)
        if quick != upper:
            raise InternalError(f"partition solvers disagree: {quick} vs {upper}")
    cover = [(bits_to_mask(b), max(child_chi[i] for i in b)) for b in blocks]
    lower = heaviest_clique(quotient, child_chi)
    if lower == upper:
        return upper, cover
    sets = _maximal_independent_sets(quotient)
    # invariant: upper is achievable, lower - 1 is not
    while lower < upper:
        mid = (lower + upper) // 2
        x = feasible(_cover_ilp(sets, child_chi, mid))
        if x is None:
            lower = mid + 1
        else:
            upper = sum(x)
            cover = [(s, c) for s, c in zip(sets, x) if c]
    return upper, cover


def chromatic_of_substitution(quotient: Graph, child_chi: Sequence[int], fast: bool = False) -> int:
    return color_cover(quotient, child_chi, fast=fast)[0]


def chromatic_number(g: Graph, tree: Node | None = None, fast: bool = False) -> int:
    """Exact chromatic number, bottom-up over the normalized decomposition."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    tree = normalize(tree if tree is not None else modular_decomposition(g))
    chi: dict[int, int] = {}
    for node in postorder(tree):
        if isinstance(node, Leaf):
            chi[id(node)] = 1
        else:
            kids = [chi.pop(id(c)) for c in node.children]
            chi[id(node)] = chromatic_of_substitution(quotient_of(node), kids, fast=fast)
    return chi[id(tree)]


def coloring_witness(g: Graph, tree: Node | None = None) -> ColoringWitness:
    """A proper coloring using exactly ``chromatic_number(g)`` colors.

    Each node colors its leaves with ``0..chi-1``. At a substitution node
    every independent set of the cover gets as many fresh colors as its
    multiplicity; child ``i`` lists the colors of the sets containing it and
    maps its own colors onto the first ``chi(G_i)`` of them.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    tree = normalize(tree if tree is not None else modular_decomposition(g))
    # per node: (chi, {vertex: color})
    done: dict[int, tuple[int, dict[int, int]]] = {}
    for node in postorder(tree):
        if isinstance(node, Leaf):
            done[id(node)] = (1, {node.vertex: 0})
            continue
        kids = [done.pop(id(c)) for c in node.children]
        chis = [c for c, _ in kids]
        chi, cover = color_cover(quotient_of(node), chis)
        palette: list[list[int]] = [[] for _ in kids]
        nxt = 0
        for s, mult in cover:
            block = range(nxt, nxt + mult)
            nxt += mult
            for i in iter_bits(s):
                palette[i].extend(block)
        merged: dict[int, int] = {}
        for i, (_, colors) in enumerate(kids):
            for v, c in colors.items():
                merged[v] = palette[i][c]
        done[id(node)] = (chi, merged)
    chi, colors = done[id(tree)]
    return ColoringWitness(tuple(colors[v] for v in range(g.n)))
