"""Atom-graph construction: forest-join, max-weight union, and the naive oracle.

The atom graph has the atoms as nodes and an edge AB exactly when A & B
separates A minus B from B minus A; equivalently it is the union of all atom
trees.  Three independent routes are provided (plus a brute-force spanning
tree enumerator for verification), and they must agree:

* ``forest_join`` / ``forest_join_diff``: scan an atom tree, and for each
  distinct edge label S join all node pairs lying in different components of
  the S-subtree with the S-labeled edges removed;
* ``atom_graph_max_weight``: the union of all maximum-weight spanning trees
  of the weighted intersection graph of the atoms;
* ``naive_atom_graph``: the definitional separation check per atom pair.

Everything here works just as well on join trees of alpha-acyclic
hypergraphs; the hypergraph module reuses these routines.
"""

from __future__ import annotations

import itertools
from array import array
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from . import _kernels, _pycore
from .errors import DisconnectedError, InputError
from .graph import Graph, WeightedEdgeGraph, is_separator_between
from .settree import LabeledSetGraph, LabeledSetTree

AtomGraph = LabeledSetGraph


@dataclass(frozen=True)
class SubsetRelation:
    """Inclusion between the labels of a set-tree's edges.

    ``holds(e, f)`` is True iff label(e) is a subset of label(f); the
    relation is reflexive and transitive, and mutual inclusion means equal
    labels.
    """

    entries: tuple[tuple[bool, ...], ...]

    def holds(self, e: int, f: int) -> bool:
        return self.entries[e][f]


def subset_relation(t: LabeledSetTree) -> SubsetRelation:
    """Pairwise label inclusion for all edges of ``t``, O(p * s)."""
    labels = t.labels
    return SubsetRelation(
        tuple(tuple(le <= lf for lf in labels) for le in labels)
    )


def _component_split(
    t: LabeledSetTree,
    edge: int,
    accepts: Callable[[int, int, int], bool],
    closes: Callable[[int], bool],
) -> list[frozenset[int]]:
    """Components of the S-subtree of ``t`` minus its S-labeled edges.

    Breadth-first from the smaller endpoint of ``edge``; an edge is crossed
    only when ``accepts`` says its label contains S, and opens a new
    component when ``closes`` says its label equals S.
    """
    start = t.edges[edge][0]
    comps: list[list[int]] = [[start]]
    num_comp = {start: 0}
    pred = {start: -1}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in t.neighbors(x):
            if y == pred[x]:
                continue
            k = t.edge_index(x, y)
            if not accepts(k, x, y):
                continue
            if closes(k):
                comps.append([])
                i = len(comps) - 1
            else:
                i = num_comp[x]
            comps[i].append(y)
            num_comp[y] = i
            pred[y] = x
            queue.append(y)
    return [frozenset(c) for c in comps]


def components_of_separator(
    t: LabeledSetTree, edge: int, sub: SubsetRelation
) -> list[frozenset[int]]:
    """Node components associated with the separator of ``edge``.

    With S = label(edge), returns the connected components of the subtree
    induced by the nodes containing S after removing every edge whose label
    equals S, in discovery order.
    """
    return _component_split(
        t,
        edge,
        lambda k, _x, _y: sub.holds(edge, k),
        lambda k: sub.holds(k, edge),
    )


def _forest_join_core(
    t: LabeledSetTree, split: Callable[[int], list[frozenset[int]]]
) -> LabeledSetGraph:
    p = len(t.nodes)
    present = [bytearray(p) for _ in range(p)]
    for k, (a, b) in enumerate(t.edges):
        if present[a][b]:
            continue
        comps = split(k)
        for ci in range(len(comps)):
            for cj in range(ci + 1, len(comps)):
                for x in comps[ci]:
                    row = present[x]
                    for y in comps[cj]:
                        row[y] = 1
                        present[y][x] = 1
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p) if present[i][j]]
    return LabeledSetGraph(t.nodes, pairs)


def forest_join(t: LabeledSetTree, sub: SubsetRelation | None = None) -> AtomGraph:
    """Atom graph (union join graph) from a tree and its subset relation.

    Scans the tree edges; each edge whose label's edge set is not yet
    covered triggers one ``components_of_separator`` call, and all
    cross-component node pairs become edges.  O(p^2) given ``sub``.
    """
    if sub is None:
        sub = subset_relation(t)
    return _forest_join_core(t, lambda k: components_of_separator(t, k, sub))


def forest_join_diff(t: LabeledSetTree) -> AtomGraph:
    """forest_join without a precomputed subset relation.

    Label inclusion is tested against precomputed endpoint difference sets:
    with S a subset of the current node X, S is a subset of X & Y iff S
    misses X minus Y; label equality then reduces to a size comparison.
    """
    labels = t.labels
    sizes = [len(lab) for lab in labels]
    diff_fwd = []
    diff_bwd = []
    for (i, j) in t.edges:
        diff_fwd.append(tuple(t.nodes[i] - t.nodes[j]))
        diff_bwd.append(tuple(t.nodes[j] - t.nodes[i]))

    def split(edge: int) -> list[frozenset[int]]:
        s = labels[edge]
        size = sizes[edge]

        def accepts(k: int, x: int, _y: int) -> bool:
            d = diff_fwd[k] if x == t.edges[k][0] else diff_bwd[k]
            return s.isdisjoint(d)

        return _component_split(t, edge, accepts, lambda k: sizes[k] == size)

    return _forest_join_core(t, split)


def union_max_weight(
    wg: WeightedEdgeGraph,
    *,
    level_snapshots: list[tuple[int, tuple[tuple[int, int], ...]]] | None = None,
) -> WeightedEdgeGraph:
    """Union of all maximum-weight spanning trees of a connected graph.

    Processes weight levels from the maximum down to 0; a level's edges are
    kept iff their endpoints lie in different components as of the start of
    that level, and components are merged only afterwards (this differs from
    Kruskal: parallel same-level edges between two components are all kept).

    When ``level_snapshots`` is a list, the pure-Python kernel runs and
    appends ``(k, kept_edges)`` after every level k.
    """
    if not wg.is_connected():
        raise DisconnectedError("union of maximum-weight spanning trees needs a connected graph")
    items = sorted(wg.edges.items())
    ei = array("i", [e[0][0] for e in items])
    ej = array("i", [e[0][1] for e in items])
    ew = array("i", [e[1] for e in items])
    if level_snapshots is None:
        keep = _kernels.umw_select(wg.n, ei, ej, ew)
    else:
        def record(k: int, kept: list[int]) -> None:
            level_snapshots.append((k, tuple(items[e][0] for e in kept)))

        keep = _pycore.umw_select(wg.n, ei, ej, ew, snapshot=record)
    return WeightedEdgeGraph(
        wg.nodes, {pair: w for keep_it, (pair, w) in zip(keep, items) if keep_it}
    )


def atom_graph_max_weight(wig: WeightedEdgeGraph) -> AtomGraph:
    """Atom graph from the weighted intersection graph of the atoms.

    The union of the maximum-weight spanning trees, with each surviving edge
    annotated by the intersection of its endpoint sets.  O(n + p^2).
    """
    if not all(isinstance(s, frozenset) for s in wig.nodes):
        raise InputError("intersection-graph nodes must be frozensets")
    um = union_max_weight(wig)
    return LabeledSetGraph(wig.nodes, um.edges.keys())


def naive_atom_graph(g: Graph, atom_sets: Sequence[frozenset[int]]) -> AtomGraph:
    """Ground-truth oracle: test every atom pair with a separation check.

    AB is an edge iff A & B is nonempty and separates A minus B from
    B minus A in g.  O(p^2 * m)."""
    sets = [g.vertex_set(s) for s in atom_sets]
    pairs = []
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            a, b = sets[i], sets[j]
            inter = a & b
            if inter and is_separator_between(g, inter, a - b, b - a):
                pairs.append((i, j))
    return LabeledSetGraph(sets, pairs)


def _spanning_trees_multigraph(nodes, edge_list, budget):
    """All spanning trees of a small connected multigraph.

    ``edge_list`` items are (tag, u, v); trees are returned as tag tuples.
    Include/exclude recursion on the edge list, pruning exclude branches
    that disconnect the remainder.
    """
    target = len(nodes) - 1
    if target == 0:
        return [()]
    out = []

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(idx, chosen, parent):
        if len(chosen) == target:
            out.append(tuple(chosen))
            if budget is not None:
                budget[0] -= 1
                if budget[0] < 0:
                    raise InputError("maximum spanning-tree count exceeded")
            return
        if idx == len(edge_list):
            return
        _tag, u, v = edge_list[idx]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            child = dict(parent)
            child[ru] = rv
            rec(idx + 1, chosen + [edge_list[idx][0]], child)
        rest = dict(parent)
        for _t, a, b in edge_list[idx + 1:]:
            ra, rb = find(rest, a), find(rest, b)
            if ra != rb:
                rest[ra] = rb
        if len({find(rest, x) for x in nodes}) == 1:
            rec(idx + 1, chosen, parent)

    rec(0, [], {x: x for x in nodes})
    return out


def _maximal_forests(contracted_edges, max_trees):
    """All maximal forests of a multigraph given as (tag, u, v) edges.

    One spanning tree per connected piece, combined across pieces.
    """
    piece_of: dict = {}
    pieces: list[list] = []
    for tag, u, v in contracted_edges:
        pu, pv = piece_of.get(u), piece_of.get(v)
        if pu is None and pv is None:
            piece_of[u] = piece_of[v] = len(pieces)
            pieces.append([u, v])
        elif pu is None:
            piece_of[u] = pv
            pieces[pv].append(u)
        elif pv is None:
            piece_of[v] = pu
            pieces[pu].append(v)
        elif pu != pv:
            for x in pieces[pv]:
                piece_of[x] = pu
            pieces[pu].extend(pieces[pv])
            pieces[pv] = []
    groups: dict[int, list] = {}
    for tag, u, v in contracted_edges:
        groups.setdefault(piece_of[u], []).append((tag, u, v))
    per_piece = []
    count = 1
    for pid in sorted(groups):
        budget = None if max_trees is None else [max_trees]
        choices = _spanning_trees_multigraph(sorted(pieces[pid]), groups[pid], budget)
        count *= len(choices)
        if max_trees is not None and count > max_trees:
            raise InputError("maximum spanning-tree count exceeded")
        per_piece.append(choices)
    return [tuple(itertools.chain.from_iterable(combo)) for combo in itertools.product(*per_piece)]


def enumerate_max_weight_spanning_trees(
    wg: WeightedEdgeGraph, max_nodes: int = 12, max_trees: int | None = None
) -> list[frozenset[tuple[int, int]]]:
    """Every maximum-weight spanning tree of a small connected graph.

    Works level by level: after fixing the components reached by heavier
    edges, the weight-k edges of a maximum tree form a maximal forest of the
    contracted weight-k multigraph, and the per-level choices are
    independent.  Trees come back as frozensets of (i, j) node pairs.
    """
    if wg.n > max_nodes:
        raise InputError(f"enumeration is limited to {max_nodes} nodes, got {wg.n}")
    if not wg.is_connected():
        raise DisconnectedError("spanning trees need a connected graph")
    if wg.n <= 1:
        return [frozenset()]
    by_weight: dict[int, list[tuple[int, int]]] = {}
    for (i, j), w in sorted(wg.edges.items()):
        by_weight.setdefault(w, []).append((i, j))
    comp = list(range(wg.n))
    level_choices = []
    for w in sorted(by_weight, reverse=True):
        contracted = [
            ((i, j), comp[i], comp[j]) for i, j in by_weight[w] if comp[i] != comp[j]
        ]
        if contracted:
            level_choices.append(_maximal_forests(contracted, max_trees))
            for (i, j), _cu, _cv in contracted:
                cu, cv = comp[i], comp[j]
                if cu != cv:
                    lo, hi = (cu, cv) if cu < cv else (cv, cu)
                    comp = [lo if c == hi else c for c in comp]
    total = 1
    for choices in level_choices:
        total *= len(choices)
        if max_trees is not None and total > max_trees:
            raise InputError("maximum spanning-tree count exceeded")
    trees = [
        frozenset(itertools.chain.from_iterable(combo))
        for combo in itertools.product(*level_choices)
    ]
    return sorted(trees, key=sorted)
