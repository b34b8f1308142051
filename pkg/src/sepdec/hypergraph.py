"""Alpha-acyclic hypergraphs, join trees, and the union join graph.

A hypergraph is alpha-acyclic iff it has a join tree (a tree on the
hyperedges with the running-intersection property); the union join graph is
the union of all join trees.  For a connected alpha-acyclic clutter these
notions coincide with the atoms machinery: the hypergraph is the atom
hypergraph of its own 2-section.

Disconnected hypergraphs follow the join-forest-linking convention: join
trees connect the components with empty-labeled edges, so the union join
graph contains *all* inter-component hyperedge pairs.  (Graphs, by contrast,
are decomposed per component into a forest; the two conventions intentionally
differ and meet only through the CLI's --hypergraph-convention flag.)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .atomgraph import forest_join, subset_relation, union_max_weight
from .errors import InputError, NotAcyclicError
from .graph import Graph, WeightedEdgeGraph, weighted_intersection_graph
from .settree import LabeledSetGraph, LabeledSetTree

AUX_PREFIX = "@aux:"


class Hypergraph:
    """Vertex set plus a family of nonempty hyperedges covering it.

    Hyperedges are stored as frozensets of internal vertex indices and are
    pairwise distinct; identity is positional.
    """

    __slots__ = ("vertices", "hyperedges", "_index")

    def __init__(self, vertices: Iterable[str], hyperedges: Iterable[Iterable[int]]):
        names = tuple(vertices)
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise InputError(f"vertex names must be nonempty and whitespace-free, got {name!r}")
            if name in index:
                raise InputError(f"duplicate vertex name {name!r}")
            index[name] = i
        edges = tuple(frozenset(e) for e in hyperedges)
        covered: set[int] = set()
        for e in edges:
            if not e:
                raise InputError("hyperedges must be nonempty")
            for x in e:
                if not isinstance(x, int) or not 0 <= x < len(names):
                    raise InputError(f"hyperedge member {x!r} is not a vertex index")
            covered |= e
        if len(set(edges)) != len(edges):
            raise InputError("hyperedges must be pairwise distinct")
        if covered != set(range(len(names))):
            raise InputError("the union of the hyperedges must equal the vertex set")
        self.vertices = names
        self.hyperedges = edges
        self._index = index

    @classmethod
    def from_name_sets(cls, sets: Iterable[Iterable[str]]) -> "Hypergraph":
        """Build from name collections; vertices appear in first-mention order."""
        sets = [list(s) for s in sets]
        order: dict[str, int] = {}
        for s in sets:
            for name in s:
                order.setdefault(name, len(order))
        return cls(order.keys(), [{order[name] for name in s} for s in sets])

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def p(self) -> int:
        return len(self.hyperedges)

    def vertex_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown vertex {name!r}") from None

    def names_of(self, members: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in sorted(members))

    def is_connected(self) -> bool:
        """True iff the line graph (equivalently the 2-section) is connected."""
        if self.p <= 1:
            return True
        holders: dict[int, list[int]] = {}
        for k, e in enumerate(self.hyperedges):
            for x in e:
                holders.setdefault(x, []).append(k)
        seen = bytearray(self.p)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            k = queue.popleft()
            for x in self.hyperedges[k]:
                for k2 in holders[x]:
                    if not seen[k2]:
                        seen[k2] = 1
                        count += 1
                        queue.append(k2)
        return count == self.p

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices == other.vertices and self.hyperedges == other.hyperedges

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, p={self.p})"


@dataclass(frozen=True)
class HyperedgeMapping:
    """Positional one-to-one map from source hyperedges to target hyperedges."""

    source: Hypergraph
    target: Hypergraph

    def __post_init__(self):
        if self.source.p != self.target.p:
            raise InputError("mapping requires equally many hyperedges on both sides")

    def image(self, hyperedge: frozenset[int]) -> frozenset[int]:
        pos = {e: k for k, e in enumerate(self.source.hyperedges)}
        try:
            return self.target.hyperedges[pos[frozenset(hyperedge)]]
        except KeyError:
            raise InputError("not a source hyperedge") from None

    def apply(self, g: LabeledSetGraph) -> LabeledSetGraph:
        """Push a graph over source hyperedges through the mapping."""
        return LabeledSetGraph([self.image(x) for x in g.nodes], g.edges)

    def pairs(self) -> tuple[tuple[frozenset[int], frozenset[int]], ...]:
        return tuple(zip(self.source.hyperedges, self.target.hyperedges))


def two_section(h: Hypergraph) -> Graph:
    """Graph on the hypergraph's vertices joining pairs inside a hyperedge."""
    pairs = []
    for e in h.hyperedges:
        members = sorted(e)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                pairs.append((h.vertices[members[a]], h.vertices[members[b]]))
    return Graph(h.vertices, pairs)


def line_graph_weighted(h: Hypergraph) -> WeightedEdgeGraph:
    """Intersection graph of the hyperedges, weighted by intersection size."""
    return weighted_intersection_graph(h.hyperedges)


def join_tree(h: Hypergraph) -> LabeledSetTree:
    """One join tree, or NotAcyclicError with a witness vertex.

    A maximum-weight spanning tree of the weighted complete graph on the
    hyperedges (inter-component pairs weigh 0, which links the per-component
    join trees into one tree).  The running-intersection property of the
    result decides alpha-acyclicity, so it is verified before returning.
    """
    p = h.p
    if p == 0:
        return LabeledSetTree([], [])
    ranked = sorted(
        ((i, j) for i in range(p) for j in range(i + 1, p)),
        key=lambda e: (-len(h.hyperedges[e[0]] & h.hyperedges[e[1]]), e),
    )
    parent = list(range(p))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for i, j in ranked:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            if len(chosen) == p - 1:
                break
    t = LabeledSetTree(h.hyperedges, chosen)
    witness = t.running_intersection_witness()
    if witness is not None:
        raise NotAcyclicError(h.vertices[witness])
    return t


def is_alpha_acyclic(h: Hypergraph) -> bool:
    """True iff the hypergraph has a join tree."""
    try:
        join_tree(h)
    except NotAcyclicError:
        return False
    return True


def is_clutter(h: Hypergraph) -> bool:
    """True iff no hyperedge contains another."""
    edges = h.hyperedges
    return not any(
        a < b for a in edges for b in edges if a is not b
    )


def verify_join_tree(h: Hypergraph, t: LabeledSetTree) -> bool:
    """True iff ``t`` is a join tree of ``h`` (running intersection holds)."""
    if set(t.nodes) != set(h.hyperedges):
        raise InputError("tree nodes do not match the hyperedges")
    return t.running_intersection_witness() is None


def path_union_join(t: LabeledSetTree) -> LabeledSetGraph:
    """Union join graph of a join tree by explicit path inspection.

    XY is an edge iff some edge on the tree path between X and Y carries
    exactly X & Y.  Quadratic in paths; this is the reference oracle the
    fast algorithms are checked against.
    """
    p = len(t.nodes)
    pairs = []
    for x in range(p):
        parent = {x: -1}
        queue = deque([x])
        while queue:
            a = queue.popleft()
            for b in t.neighbors(a):
                if b not in parent:
                    parent[b] = a
                    queue.append(b)
        for y in range(x + 1, p):
            inter = t.nodes[x] & t.nodes[y]
            cur = y
            while cur != x:
                k = t.edge_index(cur, parent[cur])
                if t.label(k) == inter:
                    pairs.append((x, y))
                    break
                cur = parent[cur]
    return LabeledSetGraph(t.nodes, pairs)


def uj_min_weight(t: LabeledSetTree, lw: WeightedEdgeGraph) -> LabeledSetGraph:
    """Union join graph from a join tree plus the weighted line graph.

    Single tree traversal maintaining, for every reached pair, the minimum
    edge weight on their tree path; XY becomes an edge exactly when its own
    weight (0 for non-edges of the line graph) equals that minimum.  O(p^2).
    """
    if set(t.nodes) != set(lw.nodes):
        raise InputError("line-graph nodes do not match the tree nodes")
    p = len(t.nodes)
    if p == 0:
        return LabeledSetGraph([], [])
    lw_pos = {s: i for i, s in enumerate(lw.nodes)}
    at = [lw_pos[s] for s in t.nodes]

    def w(x: int, y: int) -> int:
        return lw.weight(at[x], at[y])

    min_weight = [[0] * p for _ in range(p)]
    reached = [0]
    in_reached = bytearray(p)
    in_reached[0] = 1
    result = set(t.edges)
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in t.neighbors(x):
            if in_reached[y]:
                continue
            wxy = w(x, y)
            min_weight[x][y] = min_weight[y][x] = wxy
            for z in reached:
                if z == x:
                    continue
                mw = min(wxy, min_weight[x][z])
                min_weight[y][z] = min_weight[z][y] = mw
                if mw == w(y, z):
                    result.add((y, z) if y < z else (z, y))
            reached.append(y)
            in_reached[y] = 1
            queue.append(y)
    return LabeledSetGraph(t.nodes, result)


UNION_JOIN_ALGORITHMS = ("forest-join", "max-weight", "min-weight")


def union_join_graph(h: Hypergraph, algo: str = "forest-join") -> LabeledSetGraph:
    """Union of all join trees of an alpha-acyclic hypergraph.

    Dispatches to forest_join over a join tree, to the max-weight-tree union
    over the line graph (augmented with weight-0 inter-component pairs), or
    to uj_min_weight.  All three agree.
    """
    if algo not in UNION_JOIN_ALGORITHMS:
        raise InputError(f"algo must be one of {UNION_JOIN_ALGORITHMS}, got {algo!r}")
    t = join_tree(h)
    if algo == "forest-join":
        return forest_join(t, subset_relation(t))
    if algo == "min-weight":
        return uj_min_weight(t, line_graph_weighted(h))
    lw = line_graph_weighted(h)
    if h.p == 0:
        return LabeledSetGraph([], [])
    comp = list(range(h.p))
    for i, j in lw.edges:
        ci, cj = comp[i], comp[j]
        if ci != cj:
            lo, hi = (ci, cj) if ci < cj else (cj, ci)
            comp = [lo if c == hi else c for c in comp]
    augmented = dict(lw.edges)
    for i in range(h.p):
        for j in range(i + 1, h.p):
            if comp[i] != comp[j]:
                augmented.setdefault((i, j), 0)
    um = union_max_weight(WeightedEdgeGraph(lw.nodes, augmented))
    return LabeledSetGraph(lw.nodes, um.edges.keys())


def clutter_embedding(h: Hypergraph) -> tuple[Hypergraph, HyperedgeMapping]:
    """Embed an alpha-acyclic hypergraph into a connected alpha-acyclic clutter.

    Every hyperedge that is not inclusion-maximal gets a fresh private
    vertex ("@aux:<index>"); if the hypergraph is disconnected every
    hyperedge additionally gets one fresh shared vertex ("@aux:common").
    Join trees, the union join graph, and pairwise intersections transfer
    along the returned mapping.  A connected clutter comes back unchanged
    with the identity mapping.
    """
    join_tree(h)
    edges = h.hyperedges
    maximal = [
        not any(edges[i] < other for other in edges) for i in range(h.p)
    ]
    connected = h.is_connected()
    if all(maximal) and connected:
        return h, HyperedgeMapping(h, h)
    names = list(h.vertices)
    new_edges = [set(e) for e in edges]
    for i in range(h.p):
        if not maximal[i]:
            new_edges[i].add(len(names))
            names.append(f"{AUX_PREFIX}{i}")
    if not connected:
        shared = len(names)
        names.append(f"{AUX_PREFIX}common")
        for e in new_edges:
            e.add(shared)
    h2 = Hypergraph(names, new_edges)
    return h2, HyperedgeMapping(h, h2)
