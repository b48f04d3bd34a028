"""Brute-force reference solvers.

Nothing here is used by the parameterized algorithms; tests and the
``check`` command compare against these. They share only the
:class:`~modwidth.graph.Graph` container with the code they check.
"""

from __future__ import annotations

from .errors import CapacityError
from .graph import Graph

# size caps per oracle; overridable per call
CAPS = {
    "held_karp": 20,
    "path_partition": 12,
    "chromatic": 12,
    "modular_width": 8,
}


def _cap(name: str, n: int, cap: int | None) -> None:
    limit = CAPS[name] if cap is None else cap
    if n > limit:
        raise CapacityError(f"{name} oracle is capped at n={limit}, got n={n}")


def _nbrs(g: Graph) -> list[list[int]]:
    return [[u for u in range(g.n) if g.has_edge(v, u)] for v in range(g.n)]


def held_karp_hamiltonian(g: Graph, allow_degenerate: bool = False, cap: int | None = None) -> bool:
    """Hamiltonian cycle test by subset DP over (visited set, endpoint).

    With ``allow_degenerate`` a single vertex and a single edge count as
    closed walks.
    """
    _cap("held_karp", g.n, cap)
    n = g.n
    if n == 0:
        return False
    if n == 1:
        return allow_degenerate
    if n == 2:
        return allow_degenerate and g.has_edge(0, 1)
    nb = _nbrs(g)
    # ends[mask]: bitset of v such that some path 0 -> v covers exactly mask
    ends = [0] * (1 << n)
    ends[1] = 1
    for mask in range(1, 1 << n, 2):
        e = ends[mask]
        if not e:
            continue
        for v in range(n):
            if e >> v & 1:
                for u in nb[v]:
                    if not mask >> u & 1:
                        ends[mask | 1 << u] |= 1 << u
    last = ends[(1 << n) - 1]
    return any(last >> v & 1 for v in nb[0])


def brute_path_partition(g: Graph, cap: int | None = None) -> int:
    """Fewest vertex-disjoint paths covering ``g`` (subset DP)."""
    _cap("path_partition", g.n, cap)
    n = g.n
    if n == 0:
        return 0
    inf = n + 1
    nb = _nbrs(g)
    best = [[inf] * n for _ in range(1 << n)]
    for v in range(n):
        best[1 << v][v] = 1
    for mask in range(1, 1 << n):
        row = best[mask]
        for v in range(n):
            p = row[v]
            if p == inf:
                continue
            for u in range(n):
                if mask >> u & 1:
                    continue
                cost = p if u in nb[v] else p + 1
                nxt = best[mask | 1 << u]
                if cost < nxt[u]:
                    nxt[u] = cost
    return min(best[(1 << n) - 1])


def brute_chromatic(g: Graph, cap: int | None = None) -> int:
    """Chromatic number by backtracking over increasing color counts."""
    _cap("chromatic", g.n, cap)
    n = g.n
    if n == 0:
        return 0
    nb = _nbrs(g)
    order = sorted(range(n), key=lambda v: -len(nb[v]))
    color = [-1] * n

    def place(i: int, k: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = {color[u] for u in nb[v]}
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if place(i + 1, k, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    for k in range(1, n + 1):
        if place(0, k, 0):
            return k
    return n


def _connected(within: list[int], adjacent) -> bool:
    if len(within) <= 1:
        return True
    seen = {within[0]}
    todo = [within[0]]
    while todo:
        v = todo.pop()
        for u in within:
            if u not in seen and adjacent(u, v):
                seen.add(u)
                todo.append(u)
    return len(seen) == len(within)


def strong_modules(g: Graph) -> list[frozenset[int]]:
    """All strong modules, found by checking every vertex subset."""
    n = g.n
    modules = []
    for s in range(1, 1 << n):
        members = [v for v in range(n) if s >> v & 1]
        ok = True
        for w in range(n):
            if s >> w & 1:
                continue
            seen = [g.has_edge(w, v) for v in members]
            if any(seen) and not all(seen):
                ok = False
                break
        if ok:
            modules.append(s)
    strong = [
        s for s in modules
        if not any((s & t) and (s & t) != s and (s & t) != t for t in modules)
    ]
    return [frozenset(v for v in range(n) if s >> v & 1) for s in strong]


def brute_modular_width(g: Graph, cap: int | None = None) -> int:
    """Largest prime-node arity of the strong-module tree, found by subset search."""
    _cap("modular_width", g.n, cap)
    strong = strong_modules(g)
    width = 0
    for m in strong:
        if len(m) < 2:
            continue
        inner = [s for s in strong if s < m]
        kids = [s for s in inner if not any(s < t for t in inner)]
        verts = sorted(m)
        if not _connected(verts, g.has_edge):
            continue
        if not _connected(verts, lambda a, b: not g.has_edge(a, b)):
            continue
        width = max(width, len(kids))
    return width


def grid_ilp_feasible(p: int, lower, upper, rows, limit: int = 1_000_000):
    """First point of the box, in lexicographic order, meeting every row.

    ``rows`` are ``(coeffs, relation, rhs)`` triples with dense coefficient
    vectors. Returns the point or None.
    """
    import itertools
    import math

    ranges = [range(lo, hi + 1) for lo, hi in zip(lower, upper)]
    if math.prod(len(r) for r in ranges) > limit:
        raise CapacityError(f"box of {math.prod(len(r) for r in ranges)} points exceeds {limit}")
    tests = {"<=": lambda a, b: a <= b, "=": lambda a, b: a == b, ">=": lambda a, b: a >= b}
    for x in itertools.product(*ranges):
        if all(tests[rel](sum(c * v for c, v in zip(coeffs, x)), rhs) for coeffs, rel, rhs in rows):
            return x
    return None
