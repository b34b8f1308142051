"""Trees and graphs whose nodes are sets and whose edges carry intersections.

``LabeledSetTree`` serves as clique tree, atom tree and join tree; the label
of an edge XY is always X & Y, recomputed from the endpoints so the invariant
holds by construction.  ``LabeledSetGraph`` is the non-tree counterpart used
for atom graphs and union join graphs, where the edge label is called the
separator.

Both containers canonicalize on construction: nodes are sorted by their
sorted element tuple and edges are normalized and sorted, so structural
equality is plain ``==``.  Tree-ness and node distinctness are enforced here;
the running-intersection property is *not* (it is a checkable predicate, see
``running_intersection_witness``), which allows building intentionally
invalid trees for verification routines to reject.
"""

from __future__ import annotations

from typing import Iterable

from .errors import InputError
from .graph import WeightedEdgeGraph


def _canonicalize(nodes, edges, kind):
    node_sets = [frozenset(s) for s in nodes]
    if len(set(node_sets)) != len(node_sets):
        raise InputError(f"{kind} nodes must be pairwise distinct sets")
    order = sorted(range(len(node_sets)), key=lambda i: tuple(sorted(node_sets[i])))
    remap = {old: new for new, old in enumerate(order)}
    canon_nodes = tuple(node_sets[i] for i in order)
    canon_edges = set()
    for i, j in edges:
        if not (0 <= i < len(node_sets) and 0 <= j < len(node_sets)):
            raise InputError(f"{kind} edge ({i}, {j}) references a missing node")
        if i == j:
            raise InputError(f"{kind} edge ({i}, {j}) is a self-loop")
        a, b = remap[i], remap[j]
        canon_edges.add((a, b) if a < b else (b, a))
    return canon_nodes, tuple(sorted(canon_edges))


def _adjacency(n: int, edges) -> tuple[tuple[int, ...], ...]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    return tuple(tuple(sorted(x)) for x in nbrs)


class LabeledSetTree:
    """Tree on set-valued nodes; edge labels are endpoint intersections."""

    __slots__ = ("nodes", "edges", "_labels", "_nbrs", "_edge_index")

    def __init__(self, nodes: Iterable[frozenset], edges: Iterable[tuple[int, int]]):
        self.nodes, self.edges = _canonicalize(nodes, edges, "tree")
        p = len(self.nodes)
        if p == 0:
            if self.edges:
                raise InputError("tree with no nodes cannot have edges")
        elif len(self.edges) != p - 1:
            raise InputError(f"a tree on {p} nodes needs {p - 1} edges, got {len(self.edges)}")
        self._nbrs = _adjacency(p, self.edges)
        if p:
            seen = bytearray(p)
            seen[0] = 1
            stack = [0]
            count = 1
            while stack:
                x = stack.pop()
                for y in self._nbrs[x]:
                    if not seen[y]:
                        seen[y] = 1
                        count += 1
                        stack.append(y)
            if count != p:
                raise InputError("edges do not form a connected tree")
        self._labels = tuple(self.nodes[i] & self.nodes[j] for i, j in self.edges)
        self._edge_index = {e: k for k, e in enumerate(self.edges)}

    @property
    def labels(self) -> tuple[frozenset, ...]:
        return self._labels

    def label(self, k: int) -> frozenset:
        return self._labels[k]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._nbrs[i]

    def edge_index(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        try:
            return self._edge_index[key]
        except KeyError:
            raise InputError(f"no tree edge between nodes {i} and {j}") from None

    def running_intersection_witness(self) -> int | None:
        """Smallest element whose node set does not induce a subtree, if any."""
        elements = sorted(set().union(*self.nodes)) if self.nodes else []
        for x in elements:
            holding = sum(1 for s in self.nodes if x in s)
            inside = sum(1 for lab in self._labels if x in lab)
            if inside != holding - 1:
                return x
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledSetTree):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))

    def __repr__(self) -> str:
        return f"LabeledSetTree(p={len(self.nodes)})"


class LabeledSetGraph:
    """Graph on set-valued nodes; each edge carries the endpoint intersection."""

    __slots__ = ("nodes", "edges", "_separators", "_nbrs")

    def __init__(self, nodes: Iterable[frozenset], edges: Iterable[tuple[int, int]] = ()):
        self.nodes, self.edges = _canonicalize(nodes, edges, "graph")
        self._separators = tuple(self.nodes[i] & self.nodes[j] for i, j in self.edges)
        self._nbrs = _adjacency(len(self.nodes), self.edges)

    @property
    def separators(self) -> tuple[frozenset, ...]:
        return self._separators

    def separator(self, k: int) -> frozenset:
        return self._separators[k]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._nbrs[i]

    def separator_of_pair(self, a: frozenset, b: frozenset) -> frozenset:
        """Separator on the edge joining two node sets; InputError if absent."""
        pos = {s: i for i, s in enumerate(self.nodes)}
        try:
            i, j = pos[frozenset(a)], pos[frozenset(b)]
        except KeyError as exc:
            raise InputError(f"{exc} is not a node of this graph") from None
        key = (i, j) if i < j else (j, i)
        if key not in set(self.edges):
            raise InputError("no edge between the given nodes")
        return self.nodes[i] & self.nodes[j]

    def edge_node_pairs(self) -> frozenset[frozenset]:
        """Edges as {X, Y} set pairs, independent of node numbering."""
        return frozenset(frozenset((self.nodes[i], self.nodes[j])) for i, j in self.edges)

    def weighted(self) -> WeightedEdgeGraph:
        """Same graph with each edge weighted by its separator size."""
        return WeightedEdgeGraph(
            self.nodes, [(i, j, len(sep)) for (i, j), sep in zip(self.edges, self._separators)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledSetGraph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))

    def __repr__(self) -> str:
        return f"LabeledSetGraph(p={len(self.nodes)}, edges={len(self.edges)})"
