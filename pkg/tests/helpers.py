"""Seeded random generators shared by the property and acceptance tests."""

from __future__ import annotations

import random

from sepdec import Graph, Hypergraph, LabeledSetTree, connected_components, mcs_m


def random_connected_graph(rng: random.Random, n: int, p_edge: float) -> Graph:
    """G(n, p) patched into one component by joining leftover blocks."""
    names = [f"v{i}" for i in range(n)]
    edges = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p_edge
    ]
    g = Graph(names, edges)
    while True:
        comps = connected_components(g)
        if len(comps) <= 1:
            return g
        a = rng.choice(sorted(comps[0]))
        b = rng.choice(sorted(comps[1]))
        edges.append((names[a], names[b]))
        g = Graph(names, edges)


def random_graph(rng: random.Random, n: int, p_edge: float) -> Graph:
    names = [f"v{i}" for i in range(n)]
    edges = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p_edge
    ]
    return Graph(names, edges)


def random_connected_chordal_graph(rng: random.Random, n: int, p_edge: float) -> Graph:
    """Triangulate a random connected graph with its minimal fill."""
    g = random_connected_graph(rng, n, p_edge)
    fill = mcs_m(g).fill
    return g.with_edges_added(sorted(fill)) if fill else g


def grow_random_join_tree(
    rng: random.Random,
    max_p: int = 8,
    shrink_prob: float = 0.25,
    disconnect_prob: float = 0.1,
) -> tuple[Hypergraph, LabeledSetTree]:
    """Alpha-acyclic hypergraph built by growing a random join tree.

    Each new hyperedge takes a subset of one existing node plus optional
    fresh vertices, which preserves running intersection by construction.
    ``shrink_prob`` controls pure-subset nodes (non-clutter instances);
    ``disconnect_prob`` controls fresh-only nodes (disconnected instances).
    """
    p = rng.randint(1, max_p)
    fresh = 0

    def new_vertices(k: int) -> list[int]:
        nonlocal fresh
        out = list(range(fresh, fresh + k))
        fresh += k
        return out

    hyperedges: list[frozenset[int]] = [frozenset(new_vertices(rng.randint(1, 3)))]
    tree_edges: list[tuple[int, int]] = []
    for i in range(1, p):
        parent = rng.randrange(i)
        base = sorted(hyperedges[parent])
        roll = rng.random()
        if roll < shrink_prob and len(base) > 1:
            take = rng.randint(1, len(base) - 1)
            cand = set(rng.sample(base, take))
        elif roll < shrink_prob + disconnect_prob:
            cand = set(new_vertices(rng.randint(1, 2)))
        else:
            take = rng.randint(0, len(base))
            cand = set(rng.sample(base, take)) | set(new_vertices(rng.randint(1, 2)))
        while frozenset(cand) in hyperedges:
            cand |= set(new_vertices(1))
        hyperedges.append(frozenset(cand))
        tree_edges.append((parent, i))
    names = [f"x{i}" for i in range(fresh)]
    h = Hypergraph(names, hyperedges)
    return h, LabeledSetTree(hyperedges, tree_edges)
