"""Modular decomposition, modular-width and neighborhood diversity.

A parse tree is an algebraic expression over four operations: a single
vertex (:class:`Leaf`), disjoint union (:class:`Union`), complete join
(:class:`Join`) and substitution into a prime quotient graph
(:class:`Prime`). The width of a tree is the largest arity of a
:class:`Prime` node; :func:`modular_decomposition` returns the canonical
tree, whose width is the modular-width of the graph.

Trees can be thousands of levels deep (threshold graphs alternate union and
join at every level), so every traversal here is iterative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Graph, bits_to_mask, iter_bits


@dataclass(frozen=True)
class Leaf:
    vertex: int

    children = ()

    @property
    def mask(self) -> int:
        return 1 << self.vertex


def _union_mask(children) -> int:
    m = 0
    for c in children:
        m |= c.mask
    return m


@dataclass(frozen=True)
class Union:
    children: tuple
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        object.__setattr__(self, "mask", _union_mask(self.children))


@dataclass(frozen=True)
class Join:
    children: tuple
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        object.__setattr__(self, "mask", _union_mask(self.children))


@dataclass(frozen=True)
class Prime:
    quotient: Graph
    children: tuple
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.quotient.n != len(self.children):
            raise ValueError(
                f"quotient has {self.quotient.n} vertices but node has {len(self.children)} children"
            )
        object.__setattr__(self, "mask", _union_mask(self.children))


Node = Leaf | Union | Join | Prime

I2 = Graph.empty(2)
K2 = Graph.complete(2)


def postorder(tree: Node) -> list[Node]:
    """All nodes, every child listed before its parent."""
    out = []
    stack = [tree]
    while stack:
        node = stack.pop()
        out.append(node)
        stack.extend(node.children)
    out.reverse()
    return out


def signature(tree: Node) -> tuple:
    """Flat postorder description of a tree; equal iff the trees are equal.

    Use this rather than ``==`` on deep trees: dataclass equality recurses.
    """
    out = []
    for node in postorder(tree):
        if isinstance(node, Leaf):
            out.append(("leaf", node.vertex))
        elif isinstance(node, Prime):
            out.append(("prime", len(node.children), node.quotient.masks))
        else:
            out.append((type(node).__name__.lower(), len(node.children)))
    return tuple(out)


def leaves(tree: Node) -> Iterator[int]:
    """Leaf vertices in left-to-right order."""
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            yield node.vertex
        else:
            stack.extend(reversed(node.children))


def quotient_of(node: Node) -> Graph:
    """The operand graph of an internal node, viewed as a substitution."""
    if isinstance(node, Prime):
        return node.quotient
    if isinstance(node, Union):
        return Graph.empty(len(node.children))
    if isinstance(node, Join):
        return Graph.complete(len(node.children))
    raise TypeError("leaves have no quotient")


# -- modules -------------------------------------------------------------------


def is_module(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every vertex outside the set sees all of it or none of it."""
    s = bits_to_mask(vertices)
    if not s:
        raise ValueError("a module must be nonempty")
    if s >> g.n:
        raise ValueError("vertex out of range")
    return _is_module_mask(g, s)


def _is_module_mask(g: Graph, s: int) -> bool:
    for w in iter_bits(g.full_mask & ~s):
        hit = g.masks[w] & s
        if hit and hit != s:
            return False
    return True


def _co_components(g: Graph, within: int) -> list[int]:
    rest = within
    comps = []
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= ~g.masks[v]
            frontier = reach & rest & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def _maximal_module(g: Graph, s: int, v: int) -> int:
    """Maximal strong module of ``G[s]`` containing ``v``, for a prime node ``s``.

    Uses the forcing relation: ``y`` is forced by ``x`` when ``y`` tells
    ``v`` and ``x`` apart, and the smallest module holding ``{v, x}`` is
    ``v`` plus everything reachable from ``x``. Below a prime node that
    module is the whole set exactly when ``x`` lies outside ``v``'s maximal
    strong module.
    """
    masks = g.masks
    t = s & ~(1 << v)
    av = masks[v]

    # find some c whose forcing closure is all of t, expanding each vertex once
    closed = 0  # union of forcing-closed sets known to sit inside v's module
    c = None
    rest = t
    while rest:
        y = (rest & -rest).bit_length() - 1
        seen = 1 << y
        stack = [y]
        while stack:
            z = stack.pop()
            new = (av ^ masks[z]) & t & ~seen & ~closed
            if new:
                seen |= new
                stack.extend(iter_bits(new))
        if seen | closed == t:
            c = y
            break
        closed |= seen
        rest = t & ~closed
    if c is None:
        raise AssertionError("node is not prime: every vertex shares a module with the pivot")

    # vertices whose closure contains c lie outside v's module
    outside = 1 << c
    stack = [c]
    while stack:
        y = stack.pop()
        pred = ~masks[y] if av >> y & 1 else masks[y]
        new = pred & t & ~outside & ~(1 << y)
        if new:
            outside |= new
            stack.extend(iter_bits(new))
    return s & ~outside


def _prime_parts(g: Graph, s: int) -> list[int]:
    parts = []
    rest = s
    while rest:
        v = (rest & -rest).bit_length() - 1
        part = _maximal_module(g, s, v)
        parts.append(part)
        rest &= ~part
    return parts


def _split(g: Graph, s: int):
    comps = g.components(s)
    if len(comps) > 1:
        return Union, comps
    cocomps = _co_components(g, s)
    if len(cocomps) > 1:
        return Join, cocomps
    return Prime, _prime_parts(g, s)


def modular_decomposition(g: Graph) -> Node:
    """Canonical decomposition tree of ``g``; children ordered by least vertex."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    built: dict[int, Node] = {}
    stack = [(g.full_mask, None)]
    while stack:
        s, plan = stack.pop()
        if s & (s - 1) == 0:
            built[s] = Leaf(s.bit_length() - 1)
            continue
        if plan is None:
            plan = _split(g, s)
            stack.append((s, plan))
            stack.extend((c, None) for c in plan[1])
            continue
        kind, parts = plan
        children = [built.pop(p) for p in parts]
        if kind is Prime:
            reps = [(p & -p).bit_length() - 1 for p in parts]
            quotient = g.induced_subgraph(reps)
            built[s] = Prime(quotient, children)
        else:
            built[s] = kind(children)
    return built[g.full_mask]


# -- width, normalization, evaluation -----------------------------------------


def modular_width(tree: Node) -> int:
    """Largest arity of a substitution node; 0 when there is none."""
    return max((len(n.children) for n in postorder(tree) if isinstance(n, Prime)), default=0)


def normalize(tree: Node) -> Node:
    """Rewrite every union and join as a left-leaning chain of binary substitutions."""
    done: dict[int, Node] = {}
    for node in postorder(tree):
        if isinstance(node, Leaf):
            out = node
        else:
            kids = [done.pop(id(c)) for c in node.children]
            if isinstance(node, Prime):
                out = Prime(node.quotient, kids)
            else:
                q = I2 if isinstance(node, Union) else K2
                out = kids[0]
                for k in kids[1:]:
                    out = Prime(q, (out, k))
        done[id(node)] = out
    return done[id(tree)]


def evaluate(tree: Node, n: int | None = None) -> Graph:
    """Build the graph an expression denotes, on its original leaf labels."""
    if n is None:
        n = tree.mask.bit_length()
    masks = [0] * n
    for node in postorder(tree):
        if isinstance(node, Leaf):
            continue
        q = quotient_of(node)
        kids = node.children
        for i in range(len(kids)):
            for j in iter_bits(q.masks[i] >> (i + 1) << (i + 1)):
                a, b = kids[i].mask, kids[j].mask
                for u in iter_bits(a):
                    masks[u] |= b
                for w in iter_bits(b):
                    masks[w] |= a
    return Graph(n, masks, check=False)


def is_prime_graph(g: Graph) -> bool:
    """Brute-force check that ``g`` has only trivial modules (any arity)."""
    if g.n < 3:
        return False
    full = g.full_mask
    for s in range(1, full):
        if s & (s - 1) and _is_module_mask(g, s):
            return False
    return True


# -- neighborhood diversity ----------------------------------------------------


@dataclass(frozen=True)
class NdPartition:
    classes: tuple[tuple[int, ...], ...]
    is_clique: tuple[bool, ...]
    adjacency: tuple[tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)


def neighborhood_diversity(g: Graph) -> tuple[int, NdPartition]:
    """Twin classes of ``g``: ``u ~ v`` iff ``N(u) - {v} == N(v) - {u}``.

    Twins split into false twins (equal open neighborhoods) and true twins
    (equal closed neighborhoods); grouping by both keys with a union-find
    yields the classes in ``O(n)`` hash operations.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key in (lambda v: g.masks[v], lambda v: g.masks[v] | 1 << v):
        first: dict[int, int] = {}
        for v in range(g.n):
            r = first.setdefault(key(v), v)
            a, b = find(r), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = tuple(tuple(c) for c in sorted(groups.values()))
    clique = tuple(len(c) == 1 or g.has_edge(c[0], c[1]) for c in classes)
    adjacency = tuple(
        tuple(i != j and g.has_edge(a[0], b[0]) for j, b in enumerate(classes))
        for i, a in enumerate(classes)
    )
    return len(classes), NdPartition(classes, clique, adjacency)


# -- serialization -------------------------------------------------------------


def to_dict(tree: Node) -> dict:
    done: dict[int, dict] = {}
    for node in postorder(tree):
        if isinstance(node, Leaf):
            d = {"kind": "leaf", "vertex": node.vertex}
        else:
            kids = [done.pop(id(c)) for c in node.children]
            d = {"kind": type(node).__name__.lower()}
            if isinstance(node, Prime):
                d["quotient"] = {"n": node.quotient.n, "edges": [list(e) for e in node.quotient.edges()]}
            d["children"] = kids
        done[id(node)] = d
    return done[id(tree)]


def from_dict(data: dict) -> Node:
    # explicit stack: exported trees may be deeper than the recursion limit
    order = []
    stack = [data]
    while stack:
        d = stack.pop()
        order.append(d)
        stack.extend(d.get("children", ()))
    built: dict[int, Node] = {}
    for d in reversed(order):
        kind = d["kind"]
        if kind == "leaf":
            node = Leaf(int(d["vertex"]))
        else:
            kids = [built.pop(id(c)) for c in d["children"]]
            if kind == "union":
                node = Union(kids)
            elif kind == "join":
                node = Join(kids)
            elif kind == "prime":
                q = d["quotient"]
                node = Prime(Graph.from_edges(q["n"], [tuple(e) for e in q["edges"]]), kids)
            else:
                raise ValueError(f"unknown node kind {kind!r}")
        built[id(d)] = node
    return built[id(data)]


def to_dot(tree: Node) -> str:
    lines = ["graph parse_tree {", "  node [fontname=Helvetica];"]
    ids: dict[int, str] = {}
    for i, node in enumerate(postorder(tree)):
        name = f"n{i}"
        ids[id(node)] = name
        if isinstance(node, Leaf):
            lines.append(f'  {name} [label="{node.vertex}", shape=circle];')
            continue
        if isinstance(node, Prime):
            label = f"prime({len(node.children)})"
        else:
            label = type(node).__name__.lower()
        lines.append(f'  {name} [label="{label}", shape=box];')
        lines.extend(f"  {name} -- {ids[id(c)]};" for c in node.children)
    lines.append("}")
    return "\n".join(lines) + "\n"
