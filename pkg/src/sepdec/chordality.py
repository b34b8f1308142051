"""Chordal-graph machinery: MCS, chordality test, clique tree, MCS-M.

Orderings follow the maximum-cardinality-search convention: the order is a
permutation of the vertex indices where position ``n-1`` holds the vertex
visited first, so reading it left to right gives the elimination order.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import DisconnectedError, NotChordalError
from .graph import Graph, connected_components
from .settree import LabeledSetTree


@dataclass(frozen=True)
class Triangulation:
    """A minimal fill plus the elimination ordering that produced it."""

    fill: frozenset[tuple[int, int]]
    order: tuple[int, ...]


def mcs(g: Graph) -> tuple[int, ...]:
    """Maximum cardinality search order.

    Each step visits the unvisited vertex with the most visited neighbors,
    ties broken toward the smallest index; weight-zero restarts make
    per-component orders come out concatenated.
    """
    indptr, indices = g.csr()
    return tuple(_kernels.mcs_order(g.n, indptr, indices))


def is_chordal(g: Graph) -> bool:
    """True iff g has no chordless cycle of length at least 4.

    Decided by checking that the reverse MCS order is a perfect elimination
    ordering; works component-wise, so disconnected input is fine.
    """
    indptr, indices = g.csr()
    order = _kernels.mcs_order(g.n, indptr, indices)
    return bool(_kernels.peo_ok(g.n, indptr, indices, order))


def clique_tree(g: Graph) -> LabeledSetTree:
    """Clique tree of a connected chordal graph.

    Nodes are the maximal cliques; each edge label X & Y is a minimal
    separator of g.  Built during MCS: a vertex whose visited-neighbor count
    does not grow starts a new clique, attached to the home clique of its
    most recently visited neighbor.
    """
    if len(connected_components(g)) != 1:
        raise DisconnectedError("clique tree requires a connected nonempty graph")
    indptr, indices = g.csr()
    order = _kernels.mcs_order(g.n, indptr, indices)
    if not _kernels.peo_ok(g.n, indptr, indices, order):
        raise NotChordalError("clique tree requires a chordal graph")
    visit_time = [0] * g.n
    visited: set[int] = set()
    home = [0] * g.n
    cliques: list[set[int]] = []
    edges: list[tuple[int, int]] = []
    prev_card = 0
    current = 0
    for step in range(g.n):
        v = order[g.n - 1 - step]
        madj = g.adj[v] & visited
        if step == 0:
            cliques.append({v})
        elif len(madj) <= prev_card:
            u = max(madj, key=lambda w: visit_time[w])
            current = len(cliques)
            cliques.append(set(madj) | {v})
            edges.append((home[u], current))
        else:
            cliques[current].add(v)
        home[v] = current
        prev_card = len(madj)
        visit_time[v] = step
        visited.add(v)
    return LabeledSetTree(cliques, edges)


def mcs_m(g: Graph) -> Triangulation:
    """Minimal triangulation of a connected graph.

    The returned fill makes g chordal and no proper subset of it does.
    Ties in the vertex choice go to the smallest index, which pins the
    output (and everything downstream) deterministically.
    """
    if len(connected_components(g)) != 1:
        raise DisconnectedError("minimal triangulation requires a connected nonempty graph")
    indptr, indices = g.csr()
    order, fill = _kernels.mcs_m(g.n, indptr, indices)
    return Triangulation(frozenset(tuple(e) for e in fill), tuple(order))
