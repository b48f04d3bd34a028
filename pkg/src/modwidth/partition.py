"""Max Weighted Partition with one shared set function.

Given a ground set ``N = {0..n-1}``, a block count ``k`` and a cost table
over all subsets of ``N``, find a partition of ``N`` into at most ``k``
blocks maximizing the summed block costs. Empty blocks cost 0.

Two solvers:

* :func:`max_weighted_partition` (default): exact DP over subsets,
  ``O(k 3^n)``, returns the optimal partition.
* :func:`fast_partition_value`: counts labeled ``k``-partitions by total
  weight with ranked zeta/Moebius transforms over the subset lattice and
  reads off the heaviest nonzero weight class, ``O~(2^n n^2 k M)``. Value
  only; it exists to cross-check the DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import CapacityError
from .graph import iter_bits

DEFAULT_LIMIT = 20

_NEG = -(1 << 60)


@dataclass(frozen=True)
class WeightedPartitionProblem:
    size: int
    k: int
    cost: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if len(self.cost) != 1 << self.size:
            raise ValueError(f"cost table needs 2^{self.size} entries, got {len(self.cost)}")
        object.__setattr__(self, "cost", tuple(int(c) for c in self.cost))

    @property
    def bound(self) -> int:
        """``M``: the largest absolute cost of a nonempty block."""
        return max((abs(c) for c in self.cost[1:]), default=0)


@lru_cache(maxsize=16)
def _pairs(n: int):
    """All (S, T) with T a submask of S holding S's lowest element, grouped by S.

    Within a group, T runs through submasks in decreasing numeric order.
    """
    s_idx, t_idx = [], []
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        sub = rest
        while True:
            s_idx.append(s)
            t_idx.append(sub | low)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    s_arr = np.array(s_idx, dtype=np.int64)
    t_arr = np.array(t_idx, dtype=np.int64)
    starts = np.flatnonzero(np.r_[True, s_arr[1:] != s_arr[:-1]])
    return s_arr, t_arr, starts


@lru_cache(maxsize=16)
def _lex_rank(n: int) -> tuple[int, ...]:
    order = sorted(range(1 << n), key=lambda m: tuple(iter_bits(m)))
    rank = [0] * (1 << n)
    for r, m in enumerate(order):
        rank[m] = r
    return tuple(rank)


def _layers(n: int, k: int, cost: np.ndarray) -> list[np.ndarray]:
    """``best[j][S]``: max total over partitions of S into at most j blocks."""
    s_arr, t_arr, starts = _pairs(n)
    groups = s_arr[starts]
    cur = np.full(1 << n, _NEG, dtype=np.int64)
    cur[0] = 0
    layers = [cur]
    for _ in range(min(k, n)):
        prev = layers[-1]
        cand = cost[t_arr] + prev[s_arr ^ t_arr]
        nxt = prev.copy()
        nxt[groups] = np.maximum(prev[groups], np.maximum.reduceat(cand, starts))
        layers.append(nxt)
    return layers


def max_weighted_partition(
    problem: WeightedPartitionProblem, limit: int = DEFAULT_LIMIT
) -> tuple[int, list[tuple[int, ...]]]:
    """Optimal value and blocks (each a sorted tuple, ordered by least element)."""
    n = problem.size
    if n > limit:
        raise CapacityError(f"ground set of {n} elements exceeds the limit of {limit}")
    if n == 0:
        return 0, []
    cost = np.array(problem.cost, dtype=np.int64)
    cost[0] = 0
    layers = _layers(n, problem.k, cost)
    full = (1 << n) - 1
    j = len(layers) - 1
    value = int(layers[j][full])

    # walk back, preferring the lexicographically smallest block on ties
    rank = _lex_rank(n)
    blocks = []
    s = full
    while s:
        target = int(layers[j][s])
        while j > 0 and int(layers[j - 1][s]) == target:
            j -= 1
        prev = layers[j - 1]
        low = s & -s
        rest = s ^ low
        best = None
        sub = rest
        while True:
            t = sub | low
            if int(cost[t]) + int(prev[s ^ t]) == target and (best is None or rank[t] < rank[best]):
                best = t
            if sub == 0:
                break
            sub = (sub - 1) & rest
        blocks.append(tuple(iter_bits(best)))
        s ^= best
        j -= 1
    return value, blocks


# -- counting fast path --------------------------------------------------------

# Below 2^26 so that up to 2^11 products of residues can be summed in int64
# before reducing.
_PRIMES = (67108859, 67108837)


def _zeta_ranked(vals: np.ndarray, n: int, p: int) -> np.ndarray:
    # vals: (n+1, 2^n, D); in-place subset-sum transform along axis 1
    ranks, size, d = vals.shape
    for b in range(n):
        view = vals.reshape(ranks, size >> (b + 1), 2, 1 << b, d)
        view[:, :, 1] += view[:, :, 0]
        view[:, :, 1] %= p
    return vals


def _poly_mul(a: list, b: list, p: int, top: int, only_top: bool = False) -> list:
    """Product of two rank-polynomials truncated at degree ``top``."""
    out = []
    square = a is b
    for r in range(top + 1):
        if only_top and r < top:
            out.append(None)
            continue
        if square:
            acc = a[r // 2] * a[r - r // 2] if r % 2 == 0 else np.zeros_like(a[0])
            twice = np.zeros_like(a[0])
            for i in range((r + 1) // 2):
                twice += a[i] * a[r - i]
            acc += 2 * (twice % p)
        else:
            acc = np.zeros_like(a[0])
            for i in range(r + 1):
                acc += a[i] * b[r - i]
        out.append(acc % p)
    return out


def _interpolate(values: Sequence[int], p: int) -> list[int]:
    """Coefficients of the polynomial through ``(x, values[x])`` for ``x = 0..D-1``, mod p."""
    d = len(values)
    coef = [int(v) % p for v in values]
    # Newton divided differences on nodes 0..d-1
    for j in range(1, d):
        inv = pow(j, p - 2, p)
        for i in range(d - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * inv % p
    # expand Newton form into monomials
    poly = [0] * d
    for i in range(d - 1, -1, -1):
        # poly = poly * (x - i) + coef[i]
        nxt = [0] * d
        for e in range(d - 1):
            if poly[e]:
                nxt[e + 1] = (nxt[e + 1] + poly[e]) % p
                nxt[e] = (nxt[e] - i * poly[e]) % p
        nxt[0] = (nxt[0] + coef[i]) % p
        poly = nxt
    return poly


def _weight_counts(n: int, k: int, weights: np.ndarray, degree: int, p: int) -> list[int]:
    """Number of labeled k-tuples of disjoint blocks covering N, per total weight, mod p."""
    pts = np.arange(degree + 1, dtype=np.int64)
    wmax = int(weights.max())
    powers = np.ones((wmax + 1, degree + 1), dtype=np.int64)
    for w in range(1, wmax + 1):
        powers[w] = powers[w - 1] * pts % p
    size = 1 << n
    rank = np.array([bin(s).count("1") for s in range(size)])
    vals = np.zeros((n + 1, size, degree + 1), dtype=np.int64)
    vals[rank, np.arange(size)] = powers[weights]
    _zeta_ranked(vals, n, p)

    base = [vals[r] for r in range(n + 1)]
    result = None
    e = k
    sq = base
    # binary powering of the rank-polynomial, truncated at degree n
    while e:
        last = e == 1
        if e & 1:
            result = sq if result is None else _poly_mul(result, sq, p, n, only_top=last)
        e >>= 1
        if e:
            sq = _poly_mul(sq, sq, p, n)
    top = result[n]
    sign = np.where((n - rank) % 2 == 0, 1, p - 1).astype(np.int64)
    evals = (top * sign[:, None] % p).sum(axis=0) % p
    return _interpolate([int(v) for v in evals], p)


def fast_partition_value(problem: WeightedPartitionProblem, limit: int = DEFAULT_LIMIT) -> int:
    """Optimal value via weight-class counting; agrees with :func:`max_weighted_partition`."""
    n, k = problem.size, problem.k
    if n > limit:
        raise CapacityError(f"ground set of {n} elements exceeds the limit of {limit}")
    if n == 0:
        return 0
    cost = np.array(problem.cost, dtype=np.int64)
    cost[0] = 0  # empty block costs 0
    lo, hi = min(int(cost.min()), 0), max(int(cost.max()), 0)
    weights = cost - lo
    degree = max((hi - lo) * k, 1)
    counts = [_weight_counts(n, k, weights, degree, p) for p in _PRIMES]
    # true counts are below k^n < p1*p2, so nonzero mod p1*p2 means nonzero
    for t in range(degree, -1, -1):
        if any(c[t] for c in counts):
            return t + k * lo
    raise AssertionError("no partition found; every ground set has at least one")
