"""Deterministic graph generators for corpora and benchmarks.

Randomness comes from :class:`random.Random` (Mersenne Twister MT19937),
seeded explicitly per call, so the same parameters and seed always give the
same graph.
"""

from __future__ import annotations

import random

from .graph import Graph, iter_bits


def _composition(rng: random.Random, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0, *cuts, total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def random_graph(k: int, p: float, rng: random.Random, connected: bool = False) -> Graph:
    """Erdos-Renyi G(k, p); with ``connected`` resample until connected."""
    while True:
        edges = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < p]
        g = Graph.from_edges(k, edges)
        if not connected or g.is_connected():
            return g


def gen_bounded_mw(
    n: int,
    w: int,
    seed=0,
    *,
    density: float = 0.5,
    connected_quotients: bool = False,
    shuffle: bool = True,
) -> Graph:
    """Random graph on ``n`` vertices with modular-width at most ``w``.

    Samples an expression top-down: each node of size ``s > 1`` splits into
    ``k`` parts (``2 <= k <= min(w, s)``, sizes a uniform random
    composition) substituted into a random quotient on ``k`` vertices.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if w < 2:
        raise ValueError("width bound must be at least 2")
    rng = random.Random(seed)
    masks = [0] * n
    stack = [(0, n)]
    while stack:
        offset, size = stack.pop()
        if size == 1:
            continue
        k = rng.randint(2, min(w, size))
        sizes = _composition(rng, size, k)
        q = random_graph(k, density, rng, connected=connected_quotients)
        blocks = []
        start = offset
        for s in sizes:
            blocks.append((start, s, ((1 << s) - 1) << start))
            start += s
        for i, (off, s, _) in enumerate(blocks):
            outer = 0
            for j in iter_bits(q.masks[i]):
                outer |= blocks[j][2]
            if outer:
                for u in range(off, off + s):
                    masks[u] |= outer
            stack.append((off, s))
    g = Graph(n, masks, check=False)
    if shuffle:
        order = list(range(n))
        rng.shuffle(order)
        g = g.relabel(order)
    return g


def gen_subdivided_star(k: int) -> Graph:
    """Star with ``k`` leaves and every edge subdivided once: center 0, midpoints 1..k, leaves k+1..2k."""
    if k < 2:
        raise ValueError("need at least 2 rays")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, k + i) for i in range(1, k + 1)]
    return Graph.from_edges(2 * k + 1, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def mycielski(g: Graph) -> Graph:
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges += [(u, n + v), (v, n + u)]
    edges += [(n + i, 2 * n) for i in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def grotzsch() -> Graph:
    return mycielski(cycle(5))


NAMED = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (Graph.complete, 1),
    "empty": (Graph.empty, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "star": (lambda k: complete_bipartite(1, k), 1),
    "subdivided-star": (gen_subdivided_star, 1),
    "petersen": (petersen, 0),
    "grotzsch": (grotzsch, 0),
}


def gen_named(name: str, *params: int) -> Graph:
    """Standard constructions, e.g. ``gen_named("complete-bipartite", 2, 3)``."""
    try:
        build, arity = NAMED[name]
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}; choose from {sorted(NAMED)}") from None
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return build(*(int(p) for p in params))


# -- corpora -------------------------------------------------------------------

def connected_atlas(max_n: int = 7, min_n: int = 1) -> list[Graph]:
    """Every connected graph on ``min_n..max_n`` vertices, one per isomorphism class.

    Taken from the graph atlas shipped with networkx, which stops at 7 vertices.
    """
    if max_n > 7:
        raise ValueError("the atlas only covers graphs with at most 7 vertices")
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for h in graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n:
            g = Graph.from_edges(n, list(h.edges()))
            if g.is_connected():
                out.append(g)
    return out


def random_corpus(count: int = 500, max_n: int = 9, seed=0) -> list[Graph]:
    """``count`` Erdos-Renyi graphs with ``1 <= n <= max_n`` and edge
    probability drawn uniformly per graph."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        out.append(random_graph(n, rng.random(), rng))
    return out
