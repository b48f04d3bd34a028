"""Path partitions and Hamiltonicity over the modular decomposition.

The record of a node is ``(ham, size)``, where ``ham`` is the fewest
vertex-disjoint paths covering the node's graph. For a substitution
``H = Q(G_1, ..., G_n)`` a Hamiltonian cycle of ``H`` is described, up to
the order inside each child, by how often it steps from child ``i`` to child
``j``. Those counts ``e_ij`` form a balanced, connected arc multiset on the
quotient in which child ``i`` is left between ``ham(G_i)`` and ``|G_i|``
times. Whether such counts exist is a small integer program.

``ham(H)`` is the least ``l`` for which ``H`` plus ``l`` independent
universal vertices has a Hamiltonian cycle (cut the cycle at the added
vertices to get ``l`` paths). That graph is again a substitution, into the
quotient plus one universal vertex with ``I_l`` as the extra child.

Witnesses come from an Eulerian tour of the arc multiset: every time the
tour passes through child ``i`` it consumes one path of a partition of
``G_i`` into exactly as many paths as the tour has visits there.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import InternalError
from .graph import Graph, add_universal
from .ilp import EQ, GE, LE, IlpInstance, Row, feasible
from .mdtree import Leaf, Node, modular_decomposition, normalize, postorder, quotient_of


@dataclass(frozen=True)
class NodeRecord:
    ham: int
    size: int

    def __post_init__(self):
        if not 1 <= self.ham <= self.size:
            raise ValueError(f"need 1 <= ham <= size, got ({self.ham}, {self.size})")


LEAF = NodeRecord(1, 1)


@dataclass(frozen=True)
class FlowMultigraph:
    """Arc multiplicities on ``n`` quotient vertices, ``arcs[(i, j)] = e_ij > 0``."""

    n: int
    arcs: tuple[tuple[tuple[int, int], int], ...]

    def out_degree(self, i: int) -> int:
        return sum(m for (a, _), m in self.arcs if a == i)

    def in_degree(self, i: int) -> int:
        return sum(m for (_, b), m in self.arcs if b == i)

    @property
    def arc_count(self) -> int:
        return sum(m for _, m in self.arcs)

    def is_balanced(self) -> bool:
        return all(self.out_degree(i) == self.in_degree(i) for i in range(self.n))

    def is_connected(self) -> bool:
        """Support connected over *all* vertices (not just the active ones)."""
        return len(_support_components(self.n, [a for a, _ in self.arcs])) <= 1


def _support_components(n: int, pairs) -> list[int]:
    adj = [0] * n
    for a, b in pairs:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    left = (1 << n) - 1
    comps = []
    while left:
        seed = left & -left
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in range(n):
                if frontier >> v & 1:
                    grow |= adj[v]
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


# -- the integer program ---------------------------------------------------------

def _check_records(quotient: Graph, records: Sequence) -> list[NodeRecord]:
    if len(records) != quotient.n:
        raise ValueError(f"quotient has {quotient.n} vertices but {len(records)} records were given")
    return [r if isinstance(r, NodeRecord) else NodeRecord(*r) for r in records]


def _arc_vars(quotient: Graph) -> list[tuple[int, int]]:
    """Variable order: for each edge ``i < j`` (lexicographic), ``e_ij`` then ``e_ji``."""
    out = []
    for i, j in quotient.edges():
        out += [(i, j), (j, i)]
    return out


def _cut_row(arcs: list[tuple[int, int]], side: int) -> Row:
    """At least one arc across the bipartition ``(side, rest)``."""
    crossing = {t: 1 for t, (a, b) in enumerate(arcs) if (side >> a & 1) != (side >> b & 1)}
    return Row(tuple(crossing), tuple(crossing.values()), GE, 1)


def build_ham_ilp(quotient: Graph, records: Sequence, eager_cuts: bool = False) -> IlpInstance:
    """Integer program that is feasible iff the substituted graph has a
    Hamiltonian cycle (closed walks on two vertices included)."""
    recs = _check_records(quotient, records)
    arcs = _arc_vars(quotient)
    n, p = quotient.n, len(arcs)
    upper = [min(recs[a].size, recs[b].size) for a, b in arcs]
    inst = IlpInstance(p, [0] * p, upper, names=[f"e{a}_{b}" for a, b in arcs])
    for i in range(n):
        flow = {}
        for t, (a, b) in enumerate(arcs):
            if a == i:
                flow[t] = flow.get(t, 0) + 1
            elif b == i:
                flow[t] = flow.get(t, 0) - 1
        out = {t: 1 for t, (a, _) in enumerate(arcs) if a == i}
        inst.add(flow, EQ, 0)
        inst.add(out, LE, recs[i].size)
        inst.add(out, GE, recs[i].ham)
    if eager_cuts:
        # sides containing vertex 0; the complement of each is the same cut
        for side in range(1, 1 << n, 2):
            if side != quotient.full_mask:
                inst.rows.append(_cut_row(arcs, side))
    else:
        def separate(x):
            used = [arcs[t] for t, v in enumerate(x) if v]
            comps = _support_components(n, used)
            if len(comps) <= 1:
                return []
            # name each cut by the side holding vertex 0
            return [_cut_row(arcs, c) for c in comps if c & 1]

        inst.lazy_cuts = separate
    return inst


@lru_cache(maxsize=8192)
def _solve(n: int, masks: tuple[int, ...], records: tuple[NodeRecord, ...], eager: bool):
    quotient = Graph(n, masks, check=False)
    inst = build_ham_ilp(quotient, records, eager_cuts=eager)
    x = feasible(inst)
    if x is None:
        return None
    arcs = _arc_vars(quotient)
    return FlowMultigraph(n, tuple((arcs[t], v) for t, v in enumerate(x) if v))


def clear_cache() -> None:
    """Forget memoized solves (benchmarks call this between instances)."""
    _solve.cache_clear()


def has_ham_cycle_product(quotient: Graph, records: Sequence, eager_cuts: bool = False) -> FlowMultigraph | None:
    """Arc multiset of a Hamiltonian cycle of ``quotient(G_1..G_n)``, or None.

    A 2-cycle over one edge (two single vertices) is accepted here; callers
    that want simple cycles must also require three or more vertices.
    """
    recs = tuple(_check_records(quotient, records))
    return _solve(quotient.n, quotient.masks, recs, eager_cuts)


@dataclass(frozen=True)
class ProductResult:
    record: NodeRecord
    flow: FlowMultigraph  # flow on quotient + universal vertex at l = ham


def ham_of_product(
    quotient: Graph, records: Sequence, eager_cuts: bool = False, linear_scan: bool = False
) -> ProductResult:
    """Record of ``quotient(G_1..G_n)`` plus the flow certifying its ham value."""
    recs = _check_records(quotient, records)
    size = sum(r.size for r in recs)
    host = add_universal(quotient, 1)

    def probe(l: int):
        return has_ham_cycle_product(host, [*recs, NodeRecord(l, l)], eager_cuts)

    # cutting the children's own optimal partitions apart with universal
    # vertices always works, so the answer is at most the sum of their hams
    top = min(size, sum(r.ham for r in recs))
    if linear_scan:
        for l in range(1, top + 1):
            flow = probe(l)
            if flow is not None:
                return ProductResult(NodeRecord(l, size), flow)
        raise InternalError(f"no feasible l up to {top}")
    # gallop up from 1 (answers are usually small), then bisect the bracket
    lo, hi = 1, 1
    while hi < top and probe(hi) is None:
        lo, hi = hi + 1, min(2 * hi, top)
    while lo < hi:
        mid = (lo + hi) // 2
        if probe(mid) is None:
            lo = mid + 1
        else:
            hi = mid
    flow = probe(lo)
    if flow is None:
        raise InternalError(f"l = {lo} expected feasible")
    return ProductResult(NodeRecord(lo, size), flow)


# -- bottom-up evaluation ----------------------------------------------------------

def _records(tree: Node, eager_cuts: bool, linear_scan: bool) -> dict[int, tuple[NodeRecord, FlowMultigraph | None]]:
    out: dict[int, tuple[NodeRecord, FlowMultigraph | None]] = {}
    for node in postorder(tree):
        if isinstance(node, Leaf):
            out[id(node)] = (LEAF, None)
            continue
        recs = [out[id(c)][0] for c in node.children]
        res = ham_of_product(quotient_of(node), recs, eager_cuts, linear_scan)
        out[id(node)] = (res.record, res.flow)
    return out


def ham_number(g: Graph, tree: Node | None = None, eager_cuts: bool = False, linear_scan: bool = False) -> int:
    """Fewest vertex-disjoint paths covering ``g``."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    tree = normalize(tree if tree is not None else modular_decomposition(g))
    if isinstance(tree, Leaf):
        return 1
    return _records(tree, eager_cuts, linear_scan)[id(tree)][0].ham


def hamiltonian_path(g: Graph, **kw) -> bool:
    return ham_number(g, **kw) == 1


def _root_flow(g: Graph, tree: Node, eager_cuts: bool, linear_scan: bool):
    recs = _records(tree, eager_cuts, linear_scan)
    kids = [recs[id(c)][0] for c in tree.children]
    return recs, has_ham_cycle_product(quotient_of(tree), kids, eager_cuts)


def hamiltonian_cycle(g: Graph, tree: Node | None = None, eager_cuts: bool = False, linear_scan: bool = False) -> bool:
    if g.n < 3:
        return False
    tree = normalize(tree if tree is not None else modular_decomposition(g))
    return _root_flow(g, tree, eager_cuts, linear_scan)[1] is not None


# -- witnesses ----------------------------------------------------------------------

def eulerian_tour(m: FlowMultigraph, start: int | None = None) -> list[tuple[int, int]]:
    """Closed walk using every arc once (Hierholzer).

    Starts at the lowest-index vertex with arcs unless ``start`` is given and
    always leaves along the lowest-index target still available.
    """
    if not m.arcs:
        return []
    if not m.is_balanced() or not _active_connected(m):
        raise InternalError("arc multiset is not balanced and connected")
    todo: dict[int, list[int]] = {}
    for (a, b), mult in sorted(m.arcs, reverse=True):
        todo.setdefault(a, []).extend([b] * mult)  # popped from the end: lowest target first
    if start is None:
        start = min(a for (a, _), _ in m.arcs)
    stack = [(start, None)]
    tour = []
    while stack:
        v, arc = stack[-1]
        if todo.get(v):
            w = todo[v].pop()
            stack.append((w, (v, w)))
        else:
            stack.pop()
            if arc is not None:
                tour.append(arc)
    tour.reverse()
    if len(tour) != m.arc_count:
        raise InternalError("tour missed some arcs")
    return tour


def _active_connected(m: FlowMultigraph) -> bool:
    active = {v for (a, b), _ in m.arcs for v in (a, b)}
    comps = _support_components(m.n, [a for a, _ in m.arcs])
    return sum(1 for c in comps if any(c >> v & 1 for v in active)) == 1


def split_paths(paths: list[list[int]], count: int) -> list[list[int]]:
    """Refine a path partition to exactly ``count`` paths by cutting the last
    edge of the (first) longest path, repeatedly."""
    paths = [list(p) for p in paths]
    if count < len(paths) or count > sum(len(p) for p in paths):
        raise InternalError(f"cannot turn {len(paths)} paths into {count}")
    while len(paths) < count:
        t = max(range(len(paths)), key=lambda i: len(paths[i]))
        paths.insert(t + 1, [paths[t].pop()])
    return paths


def stitch_witness(
    quotient: Graph, provider: Callable[[int, int], list[list[int]]], m: FlowMultigraph
) -> list[int]:
    """Cyclic vertex sequence built from the tour of ``m``.

    ``provider(i, p)`` must return ``p`` disjoint paths covering child ``i``.
    Each passage of the tour through a quotient vertex (entering arc, leaving
    arc) consumes that child's next path; consecutive paths sit in adjacent
    children, so their joining edges exist.
    """
    tour = eulerian_tour(m)
    visits: dict[int, int] = {}
    for _, b in tour:
        visits[b] = visits.get(b, 0) + 1
    if set(visits) != set(range(quotient.n)):
        raise InternalError("tour does not visit every child")
    supply = {}
    for i, p in visits.items():
        paths = provider(i, p)
        if len(paths) != p:
            raise InternalError(f"child {i} supplied {len(paths)} paths, expected {p}")
        supply[i] = iter(paths)
    cycle = []
    for _, b in tour:
        cycle.extend(next(supply[b]))
    return cycle


def _partitions(g: Graph, tree: Node, eager_cuts: bool, linear_scan: bool, skip_root: bool = False):
    """Optimal path partitions bottom-up, keyed by node id.

    Only the most recent unconsumed nodes are kept: the root's entry, or
    with ``skip_root`` those of the root's children.
    """
    recs = _records(tree, eager_cuts, linear_scan)
    best: dict[int, list[list[int]]] = {}
    for node in postorder(tree):
        if skip_root and node is tree:
            break
        if isinstance(node, Leaf):
            best[id(node)] = [[node.vertex]]
            continue
        record, flow = recs[id(node)]
        kids = node.children
        k = len(kids)
        # the universal child's l vertices get fresh labels g.n, g.n+1, ...
        marks = list(range(g.n, g.n + record.ham))

        def provider(i, p, kids=kids):
            if i == k:
                return [[v] for v in marks]
            return split_paths(best[id(kids[i])], p)

        cycle = stitch_witness(add_universal(quotient_of(node), 1), provider, flow)
        # rotate to start at a marker, then cut at every marker
        at = next(t for t, v in enumerate(cycle) if v >= g.n)
        cycle = cycle[at:] + cycle[:at]
        paths, cur = [], []
        for v in cycle[1:] + [cycle[0]]:
            if v >= g.n:
                paths.append(cur)
                cur = []
            else:
                cur.append(v)
        if len(paths) != record.ham or any(not p for p in paths):
            raise InternalError("stitched cycle did not split into ham paths")
        best[id(node)] = paths
        for c in kids:
            best.pop(id(c))
    return recs, best


def path_partition_witness(g: Graph, tree: Node | None = None, eager_cuts: bool = False,
                           linear_scan: bool = False) -> list[list[int]]:
    """Exactly ``ham_number(g)`` disjoint paths covering ``g``."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    tree = normalize(tree if tree is not None else modular_decomposition(g))
    return _partitions(g, tree, eager_cuts, linear_scan)[1][id(tree)]


def cycle_witness(g: Graph, tree: Node | None = None, eager_cuts: bool = False,
                  linear_scan: bool = False) -> list[int] | None:
    """A Hamiltonian cycle as a vertex sequence, or None if there is none."""
    if g.n < 3:
        return None
    tree = normalize(tree if tree is not None else modular_decomposition(g))
    recs, flow = _root_flow(g, tree, eager_cuts, linear_scan)
    if flow is None:
        return None
    _, best = _partitions(g, tree, eager_cuts, linear_scan, skip_root=True)
    parts = [best[id(c)] for c in tree.children]
    return stitch_witness(quotient_of(tree), lambda i, p: split_paths(parts[i], p), flow)
