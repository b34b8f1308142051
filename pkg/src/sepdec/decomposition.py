"""Clique-minimal-separator decomposition of a connected graph.

The atoms are the inclusion-maximal connected vertex sets with no clique
separator; an atom tree organizes them with the running-intersection
property, and every edge label is a clique minimal separator.  Construction
route: minimal triangulation (MCS-M), clique tree of the triangulated graph,
then contraction of every edge whose label is not a clique of the original
graph.  Tie-breaks are pinned throughout, so the same input always yields
the same atom tree, but any tree over the same atoms with running
intersection is equally valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chordality import clique_tree, mcs_m
from .errors import DisconnectedError, InputError
from .graph import Graph, connected_components, is_clique, weighted_intersection_graph
from .hypergraph import Hypergraph
from .settree import LabeledSetTree

__all__ = [
    "DecompositionStats",
    "atom_tree",
    "atoms",
    "atom_completion",
    "atom_hypergraph",
    "decomposition_stats",
    "weighted_intersection_graph",
]


@dataclass(frozen=True)
class DecompositionStats:
    """Size parameters of a set tree over a graph.

    p: node count; s: sum of node sizes; s_delta: sum of |X symdiff Y| over
    edges; label_size_sum: sum of |X & Y| over edges.
    """

    p: int
    s: int
    s_delta: int
    label_size_sum: int


def atom_tree(g: Graph) -> LabeledSetTree:
    """Atom tree of a connected graph with at least one vertex.

    Nodes are the atoms; each edge label is a clique minimal separator.
    Contracting a tree edge never changes the surviving labels (the merged
    side stays within one side of every kept edge), so the merge pass below
    can test the original clique-tree labels once, in a fixed edge order.
    """
    if len(connected_components(g)) != 1:
        raise DisconnectedError("atom tree requires a connected nonempty graph")
    tri = mcs_m(g)
    filled = g.with_edges_added(sorted(tri.fill)) if tri.fill else g
    ct = clique_tree(filled)
    parent = list(range(len(ct.nodes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, (i, j) in enumerate(ct.edges):
        if not is_clique(g, ct.label(k)):
            ri, rj = find(i), find(j)
            if ri != rj:
                if rj < ri:
                    ri, rj = rj, ri
                parent[rj] = ri
    groups: dict[int, set[int]] = {}
    for idx, node in enumerate(ct.nodes):
        groups.setdefault(find(idx), set()).update(node)
    roots = sorted(groups)
    pos = {root: k for k, root in enumerate(roots)}
    edges = {
        tuple(sorted((pos[find(i)], pos[find(j)])))
        for i, j in ct.edges
        if find(i) != find(j)
    }
    return LabeledSetTree([groups[r] for r in roots], edges)


def atoms(g: Graph) -> tuple[frozenset[int], ...]:
    """The atoms of a connected graph, canonically ordered.

    Pairwise intersections of distinct atoms are cliques of g.
    """
    return atom_tree(g).nodes


def atom_completion(g: Graph) -> Graph:
    """Graph on the same vertices joining every pair that shares an atom.

    The result is chordal, its maximal cliques are the atoms of g, and its
    clique trees are exactly the atom trees of g.  Chordal input comes back
    unchanged.
    """
    pairs = []
    for a in atoms(g):
        members = sorted(a)
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                pairs.append((g.names[members[x]], g.names[members[y]]))
    return Graph(g.names, pairs)


def atom_hypergraph(g: Graph) -> Hypergraph:
    """Hypergraph on V(g) whose hyperedges are the atoms.

    Always a connected alpha-acyclic clutter; its join trees are the atom
    trees of g.
    """
    return Hypergraph(g.names, atoms(g))


def decomposition_stats(t: LabeledSetTree, g: Graph) -> DecompositionStats:
    """Size parameters of ``t`` over ``g``, with the structural bounds checked.

    Raises InputError when ``t`` cannot be a set tree for ``g`` (indices out
    of range, or any of p <= n, s <= n + m, label sizes <= n + m violated).
    """
    for node in t.nodes:
        for x in node:
            if not 0 <= x < g.n:
                raise InputError(f"tree node member {x} is not a vertex of the graph")
    p = len(t.nodes)
    s = sum(len(x) for x in t.nodes)
    s_delta = sum(len(t.nodes[i] ^ t.nodes[j]) for i, j in t.edges)
    label_size_sum = sum(len(lab) for lab in t.labels)
    bound = g.n + g.m
    if p > g.n or s > bound or label_size_sum > bound or (p >= 1 and s_delta < p - 1):
        raise InputError("tree violates the size bounds of a set tree over this graph")
    return DecompositionStats(p, s, s_delta, label_size_sum)
