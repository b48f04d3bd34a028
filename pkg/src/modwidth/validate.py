"""Independent witness checkers.

Each returns ``None`` when the witness is valid and a short reason string
otherwise, so callers can either assert on it or report it.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph


def coloring_problem(g: Graph, colors: Sequence[int], count: int | None = None) -> str | None:
    if len(colors) != g.n:
        return f"{len(colors)} colors for {g.n} vertices"
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return f"edge ({u}, {v}) is monochromatic"
    if count is not None and len(set(colors)) != count:
        return f"uses {len(set(colors))} colors, expected {count}"
    return None


def path_partition_problem(
    g: Graph, paths: Sequence[Sequence[int]], count: int | None = None
) -> str | None:
    seen = set()
    for path in paths:
        if not path:
            return "empty path"
        for v in path:
            if not 0 <= v < g.n:
                return f"vertex {v} out of range"
            if v in seen:
                return f"vertex {v} covered twice"
            seen.add(v)
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return f"consecutive vertices {a}, {b} are not adjacent"
    if len(seen) != g.n:
        return f"covers {len(seen)} of {g.n} vertices"
    if count is not None and len(paths) != count:
        return f"{len(paths)} paths, expected {count}"
    return None


def cycle_problem(g: Graph, cycle: Sequence[int]) -> str | None:
    if g.n < 3:
        return "a Hamiltonian cycle needs at least 3 vertices"
    if sorted(cycle) != list(range(g.n)):
        return "cycle does not visit every vertex exactly once"
    for a, b in zip(cycle, [*cycle[1:], cycle[0]]):
        if not g.has_edge(a, b):
            return f"consecutive vertices {a}, {b} are not adjacent"
    return None
