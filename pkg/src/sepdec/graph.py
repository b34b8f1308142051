"""Simple undirected graphs over named vertices, plus separator primitives.

Vertex names are arbitrary whitespace-free strings.  Everything after
construction works on dense internal indices ``0..n-1`` (insertion order);
the name <-> index mapping lives only at this boundary.  All containers
returned by the operations below are ordered by smallest internal index so
outputs are reproducible and diffable.
"""

from __future__ import annotations

from array import array
from collections import deque
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import InputError

VertexSet = frozenset[int]


class Graph:
    """Finite simple undirected graph; immutable after construction.

    No self-loops, no parallel edges.  ``adj[i]`` is the frozenset of
    neighbor indices of vertex ``i``.
    """

    __slots__ = ("names", "adj", "_index", "_m", "_csr_cache")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        names = tuple(vertices)
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise InputError(f"vertex names must be nonempty and whitespace-free, got {name!r}")
            if name in index:
                raise InputError(f"duplicate vertex name {name!r}")
            index[name] = i
        adj: list[set[int]] = [set() for _ in names]
        m = 0
        for u, v in edges:
            try:
                i, j = index[u], index[v]
            except KeyError as exc:
                raise InputError(f"edge endpoint {exc} is not a declared vertex") from None
            if i == j:
                raise InputError(f"self-loop at vertex {u!r}")
            if j not in adj[i]:
                adj[i].add(j)
                adj[j].add(i)
                m += 1
        self.names = names
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._index = index
        self._m = m
        self._csr_cache: tuple[array, array] | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], isolated: Iterable[str] = ()) -> "Graph":
        """Build a graph from name pairs; vertices appear in first-mention order."""
        edges = list(edges)
        seen: dict[str, None] = {}
        for u, v in edges:
            seen.setdefault(u)
            seen.setdefault(v)
        for v in isolated:
            seen.setdefault(v)
        return cls(seen.keys(), edges)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return self._m

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown vertex {name!r}") from None

    def name_of(self, i: int) -> str:
        return self.names[i]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) index pairs with i < j, sorted."""
        return [(i, j) for i in range(self.n) for j in sorted(self.adj[i]) if i < j]

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        """Validate indices and freeze them into a vertex set."""
        s = frozenset(members)
        for i in s:
            if not isinstance(i, int) or not 0 <= i < self.n:
                raise InputError(f"unknown vertex index {i!r}")
        return s

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Subgraph induced by ``keep``; kept vertices retain relative order."""
        kept = sorted(self.vertex_set(keep))
        names = [self.names[i] for i in kept]
        back = {old: new for new, old in enumerate(kept)}
        pairs = [
            (self.names[i], self.names[j])
            for i in kept
            for j in self.adj[i]
            if i < j and j in back
        ]
        return Graph(names, pairs)

    def with_edges_added(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """Copy of the graph with extra index-pair edges (self-loops rejected)."""
        pairs = self.edges() + [tuple(sorted(e)) for e in extra]
        return Graph(self.names, [(self.names[i], self.names[j]) for i, j in pairs])

    def csr(self) -> tuple[array, array]:
        """Adjacency in CSR form (sorted neighbor lists) for the kernels."""
        if self._csr_cache is None:
            indptr = array("i", [0] * (self.n + 1))
            indices = array("i")
            for i in range(self.n):
                nbrs = sorted(self.adj[i])
                indices.extend(nbrs)
                indptr[i + 1] = indptr[i] + len(nbrs)
            self._csr_cache = (indptr, indices)
        return self._csr_cache

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.names == other.names and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.names, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class WeightedEdgeGraph:
    """Graph over opaque hashable node ids with nonnegative integer weights.

    Used for intersection graphs of set families and for line graphs of
    hypergraphs; algorithms address nodes by position in ``nodes``.
    """

    __slots__ = ("nodes", "edges")

    def __init__(
        self,
        nodes: Iterable[Hashable],
        edges: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = (),
    ):
        self.nodes: tuple[Hashable, ...] = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise InputError("node identifiers must be distinct")
        n = len(self.nodes)
        items: Iterator[tuple[int, int, int]]
        if isinstance(edges, Mapping):
            items = ((i, j, w) for (i, j), w in edges.items())
        else:
            items = iter(edges)
        norm: dict[tuple[int, int], int] = {}
        for i, j, w in items:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"edge ({i}, {j}) references a missing node")
            if i == j:
                raise InputError(f"self-loop at node {i}")
            if not isinstance(w, int) or w < 0:
                raise InputError(f"edge ({i}, {j}) needs a nonnegative integer weight, got {w!r}")
            key = (i, j) if i < j else (j, i)
            if key in norm:
                raise InputError(f"edge {key} given twice")
            norm[key] = w
        self.edges: dict[tuple[int, int], int] = dict(sorted(norm.items()))

    @property
    def n(self) -> int:
        return len(self.nodes)

    def weight(self, i: int, j: int) -> int:
        """Weight of edge ij, 0 for a non-edge."""
        return self.edges.get((i, j) if i < j else (j, i), 0)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        return count == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedEdgeGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __repr__(self) -> str:
        return f"WeightedEdgeGraph(n={self.n}, edges={len(self.edges)})"


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the maximal connected subgraphs, by smallest member."""
    seen = bytearray(g.n)
    out: list[VertexSet] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = 1
        block = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in sorted(g.adj[x]):
                if not seen[y]:
                    seen[y] = 1
                    block.append(y)
                    queue.append(y)
        out.append(frozenset(block))
    return out


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff all pairs in ``s`` are adjacent (vacuously for |s| <= 1)."""
    s = g.vertex_set(s)
    return all(s - {u} <= g.adj[u] for u in s)


def _components_excluding(g: Graph, removed: VertexSet) -> list[VertexSet]:
    """Connected components of the graph induced by V minus ``removed``."""
    seen = bytearray(g.n)
    for i in removed:
        seen[i] = 1
    out: list[VertexSet] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = 1
        block = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in sorted(g.adj[x]):
                if not seen[y]:
                    seen[y] = 1
                    block.append(y)
                    queue.append(y)
        out.append(frozenset(block))
    return out


def neighborhood(g: Graph, c: Iterable[int]) -> VertexSet:
    """N(C): vertices outside ``c`` adjacent to some member of ``c``."""
    c = g.vertex_set(c)
    out: set[int] = set()
    for x in c:
        out |= g.adj[x]
    return frozenset(out - c)


def is_separator_between(
    g: Graph, s: Iterable[int], a_side: Iterable[int], b_side: Iterable[int]
) -> bool:
    """True iff removing ``s`` puts every a-side vertex in a different
    component from every b-side vertex."""
    s = g.vertex_set(s)
    a_side = g.vertex_set(a_side)
    b_side = g.vertex_set(b_side)
    if not a_side or not b_side:
        raise InputError("a_side and b_side must be nonempty")
    if a_side & s or b_side & s:
        raise InputError("a_side and b_side must be disjoint from the separator")
    comp_of = [-1] * g.n
    for ci, comp in enumerate(_components_excluding(g, s)):
        for x in comp:
            comp_of[x] = ci
    return not {comp_of[x] for x in a_side} & {comp_of[y] for y in b_side}


def full_components(g: Graph, s: Iterable[int]) -> list[VertexSet]:
    """Components C of G(V minus s) whose neighborhood is exactly ``s``."""
    s = g.vertex_set(s)
    return [c for c in _components_excluding(g, s) if neighborhood(g, c) == s]


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` has at least two full components."""
    return len(full_components(g, s)) >= 2


def two_pairs(g: Graph) -> list[tuple[int, int]]:
    """Non-adjacent pairs {x, y} whose common neighborhood is a minimal
    xy-separator, i.e. every chordless x-y path has length 2.

    Evaluated per connected component; the definitional check is used
    directly: x and y must land in two distinct full components of
    N(x) & N(y).
    """
    comp_of = [-1] * g.n
    for ci, comp in enumerate(connected_components(g)):
        for x in comp:
            comp_of[x] = ci
    out: list[tuple[int, int]] = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if comp_of[x] != comp_of[y] or y in g.adj[x]:
                continue
            s = g.adj[x] & g.adj[y]
            if not s:
                continue
            cx = cy = None
            for comp in _components_excluding(g, s):
                if x in comp:
                    cx = comp
                if y in comp:
                    cy = comp
            if cx is not cy and neighborhood(g, cx) == s and neighborhood(g, cy) == s:
                out.append((x, y))
    return out


def bron_kerbosch_maximal_cliques(g: Graph) -> list[VertexSet]:
    """All inclusion-maximal cliques, each exactly once, canonically sorted.

    Pivoted Bron-Kerbosch; serves as the independent oracle for the maximal
    cliques wherever a clique tree is built by other means.
    """
    out: list[VertexSet] = []

    def expand(r: frozenset[int], p: frozenset[int], x: frozenset[int]) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & g.adj[u]))
        for v in sorted(p - g.adj[pivot]):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        expand(frozenset(), frozenset(range(g.n)), frozenset())
    return sorted(out, key=lambda s: tuple(sorted(s)))


def weighted_intersection_graph(sets: Iterable[frozenset]) -> WeightedEdgeGraph:
    """Intersection graph of a family of distinct nonempty sets.

    Nodes are the sets themselves; X and Y are joined iff they intersect,
    with weight |X & Y|.  Computed by the direct marking method: O(p * s)
    for p sets of total size s.
    """
    family = [frozenset(s) for s in sets]
    if len(set(family)) != len(family):
        raise InputError("sets must be pairwise distinct")
    if any(not s for s in family):
        raise InputError("sets must be nonempty")
    edges = []
    for i, x in enumerate(family):
        for j in range(i + 1, len(family)):
            w = len(x & family[j])
            if w:
                edges.append((i, j, w))
    return WeightedEdgeGraph(family, edges)
