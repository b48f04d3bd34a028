"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is held as one integer bitmask per vertex: bit ``u`` of
``masks[v]`` is set iff ``{u, v}`` is an edge. Graphs are immutable and
hashable, so they can be shared freely and used as cache keys.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    def __init__(self, n: int, masks: Sequence[int], *, check: bool = True):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(masks) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(masks)}")
        self.n = n
        self.masks = tuple(masks)
        if check:
            self._check()

    def _check(self) -> None:
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if m & ~full:
                raise ValueError(f"vertex {v} has a neighbor index >= {self.n}")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(m):
                if not self.masks[u] >> v & 1:
                    raise ValueError(f"edge {{{v}, {u}}} is not symmetric")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks, check=False)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> Graph:
        return cls(len(adj), [bits_to_mask(a) for a in adj])

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n, check=False)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)], check=False)

    # -- queries ----------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.masks[v]))

    @property
    def adj(self) -> list[tuple[int, ...]]:
        """Sorted neighbor tuples, one per vertex."""
        return [self.neighbors(v) for v in range(self.n)]

    def degree(self, v: int) -> int:
        return popcount(self.masks[v])

    @cached_property
    def m(self) -> int:
        return sum(popcount(x) for x in self.masks) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, mask in enumerate(self.masks):
            yield from ((u, v) for v in iter_bits(mask >> (u + 1) << (u + 1)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_independent(self, mask: int) -> bool:
        return all(not (self.masks[v] & mask) for v in iter_bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.masks[v] | 1 << v) & mask == mask for v in iter_bits(mask))

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of ``G[within]`` as bitmasks, ordered by min vertex."""
        rest = self.full_mask if within is None else within
        comps = []
        while rest:
            seen = rest & -rest
            frontier = seen
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.masks[v]
                frontier = reach & rest & ~seen
                seen |= frontier
            comps.append(seen)
            rest &= ~seen
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, [full & ~m & ~(1 << v) for v, m in enumerate(self.masks)], check=False)

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """``G[X]`` with vertices reindexed ``0..|X|-1`` in increasing order."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for n={self.n}")
        pos = {v: i for i, v in enumerate(vs)}
        sel = bits_to_mask(vs)
        masks = [bits_to_mask(pos[u] for u in iter_bits(self.masks[v] & sel)) for v in vs]
        return Graph(len(vs), masks, check=False)

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph where new vertex ``i`` is old vertex ``order[i]``."""
        pos = {v: i for i, v in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        return Graph(
            self.n,
            [bits_to_mask(pos[u] for u in iter_bits(self.masks[v])) for v in order],
            check=False,
        )

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def substitute(quotient: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex ``i`` of ``quotient`` by ``parts[i]``.

    Blocks are laid out consecutively in operand order, and blocks ``i``
    and ``j`` are completely joined whenever ``{i, j}`` is a quotient edge.
    """
    if len(parts) != quotient.n:
        raise ValueError(f"quotient has {quotient.n} vertices but {len(parts)} parts were given")
    offsets = []
    total = 0
    for i, p in enumerate(parts):
        if p.n == 0:
            raise ValueError(f"part {i} is empty")
        offsets.append(total)
        total += p.n
    block = [((1 << p.n) - 1) << off for p, off in zip(parts, offsets)]
    masks = []
    for i, (p, off) in enumerate(zip(parts, offsets)):
        outer = 0
        for j in iter_bits(quotient.masks[i]):
            outer |= block[j]
        masks.extend((m << off) | outer for m in p.masks)
    return Graph(total, masks, check=False)


def add_universal(g: Graph, count: int) -> Graph:
    """``G (+) i``: add ``count`` pairwise non-adjacent vertices joined to all of ``g``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    new = ((1 << count) - 1) << g.n
    masks = [m | new for m in g.masks]
    masks.extend([g.full_mask] * count)
    return Graph(g.n + count, masks, check=False)


def disjoint_union(*graphs: Graph) -> Graph:
    return substitute(Graph.empty(len(graphs)), graphs)


def join(*graphs: Graph) -> Graph:
    return substitute(Graph.complete(len(graphs)), graphs)
