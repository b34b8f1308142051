import random

import pytest

from helpers import grow_random_join_tree, random_connected_graph
from oracles import running_intersection_ok
from sepdec import (
    Hypergraph,
    InputError,
    LabeledSetTree,
    NotAcyclicError,
    atom_completion,
    atom_hypergraph,
    atoms,
    bron_kerbosch_maximal_cliques,
    clutter_embedding,
    decomposition_stats,
    enumerate_max_weight_spanning_trees,
    is_alpha_acyclic,
    is_chordal,
    is_clutter,
    join_tree,
    line_graph_weighted,
    naive_atom_graph,
    path_union_join,
    two_section,
    uj_min_weight,
    union_join_graph,
    verify_join_tree,
)

PATH_HYPERGRAPH = [["1", "2", "3"], ["2", "3", "4"], ["3", "4", "5"]]
TRIANGLE_HYPERGRAPH = [["1", "2"], ["2", "3"], ["3", "1"]]


def hpath() -> Hypergraph:
    return Hypergraph.from_name_sets(PATH_HYPERGRAPH)


class TestHypergraphType:
    def test_empty_hyperedge_rejected(self):
        with pytest.raises(InputError):
            Hypergraph(["a"], [set(), {0}])

    def test_duplicate_hyperedges_rejected(self):
        with pytest.raises(InputError):
            Hypergraph(["a", "b"], [{0, 1}, {1, 0}])

    def test_uncovered_vertex_rejected(self):
        with pytest.raises(InputError):
            Hypergraph(["a", "b"], [{0}])

    def test_connectivity(self):
        assert hpath().is_connected()
        assert not Hypergraph.from_name_sets([["a"], ["b"]]).is_connected()


class TestTwoSection:
    def test_path_hypergraph(self):
        g = two_section(hpath())
        expect = {("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"), ("3", "4"), ("3", "5"), ("4", "5")}
        got = {(g.names[i], g.names[j]) for i, j in g.edges()}
        assert got == expect
        assert is_chordal(g)

    def test_single_hyperedge_complete(self):
        g = two_section(Hypergraph.from_name_sets([["a", "b", "c"]]))
        assert g.m == 3

    def test_atom_hypergraph_gives_completion(self, g_fig):
        assert two_section(atom_hypergraph(g_fig)) == atom_completion(g_fig)


class TestLineGraphWeighted:
    def test_path_hypergraph(self):
        lw = line_graph_weighted(hpath())
        assert lw.edges == {(0, 1): 2, (0, 2): 1, (1, 2): 2}

    def test_disjoint(self):
        lw = line_graph_weighted(Hypergraph.from_name_sets([["a"], ["b"]]))
        assert lw.edges == {}

    def test_fig_atoms(self, g_fig, fig_atoms):
        lw = line_graph_weighted(atom_hypergraph(g_fig))
        at = {k: lw.nodes.index(fig_atoms[k]) for k in "ABCDEF"}
        assert lw.weight(at["A"], at["B"]) == 3
        assert lw.weight(at["B"], at["C"]) == 2
        assert lw.weight(at["E"], at["F"]) == 2
        assert lw.weight(at["A"], at["F"]) == 0


class TestJoinTree:
    def test_path_hypergraph(self):
        t = join_tree(hpath())
        labels = sorted(tuple(sorted(lab)) for lab in t.labels)
        h = hpath()
        named = [tuple(h.vertices[i] for i in lab) for lab in labels]
        assert named == [("2", "3"), ("3", "4")]

    def test_fig_atom_hypergraph_gives_an_atom_tree(self, g_fig):
        h = atom_hypergraph(g_fig)
        t = join_tree(h)
        assert verify_join_tree(h, t)
        assert set(t.nodes) == set(atoms(g_fig))

    def test_triangle_not_acyclic_with_witness(self):
        h = Hypergraph.from_name_sets(TRIANGLE_HYPERGRAPH)
        with pytest.raises(NotAcyclicError) as err:
            join_tree(h)
        assert err.value.witness in h.vertices

    def test_disconnected_linked_by_empty_labels(self):
        h = Hypergraph.from_name_sets([["a", "b"], ["b", "c"], ["x"]])
        t = join_tree(h)
        assert t.running_intersection_witness() is None
        assert sorted(len(lab) for lab in t.labels) == [0, 1]


class TestIsAlphaAcyclic:
    def test_triangle(self):
        assert not is_alpha_acyclic(Hypergraph.from_name_sets(TRIANGLE_HYPERGRAPH))

    def test_single_hyperedge(self):
        assert is_alpha_acyclic(Hypergraph.from_name_sets([["a", "b", "c"]]))

    def test_nested_star(self):
        assert is_alpha_acyclic(Hypergraph.from_name_sets([["1", "2", "3"], ["1", "2"], ["3"]]))

    def test_powerset_hypergraph(self):
        # exponential non-clutter: p = 7 > n = 3, still alpha-acyclic
        names = ["a", "b", "c"]
        subsets = [
            [names[i] for i in range(3) if mask >> i & 1] for mask in range(1, 8)
        ]
        h = Hypergraph.from_name_sets(subsets)
        assert h.p == 7 and h.n == 3
        assert not is_clutter(h)
        assert is_alpha_acyclic(h)


class TestIsClutter:
    def test_atoms_always_clutter(self, g_fig):
        assert is_clutter(atom_hypergraph(g_fig))

    def test_nested(self):
        assert not is_clutter(Hypergraph.from_name_sets([["1", "2", "3"], ["1", "2"], ["3"]]))

    def test_two_singletons(self):
        assert is_clutter(Hypergraph.from_name_sets([["1"], ["2"]]))


class TestVerifyJoinTree:
    def test_fig_tree_against_atom_hypergraph(self, g_fig, t_fig):
        assert verify_join_tree(atom_hypergraph(g_fig), t_fig)

    def test_swapped_attachment_fails(self, g_fig, fig_atoms):
        # move F from E to A: vertices 10 and 11 stop inducing subtrees
        order = ["A", "B", "C", "D", "E", "F"]
        nodes = [fig_atoms[k] for k in order]
        bad = LabeledSetTree(nodes, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
        assert not verify_join_tree(atom_hypergraph(g_fig), bad)

    def test_single_node(self):
        h = Hypergraph.from_name_sets([["a"]])
        assert verify_join_tree(h, LabeledSetTree([frozenset({0})], []))

    def test_node_mismatch_rejected(self, g_fig, t_fig):
        with pytest.raises(InputError):
            verify_join_tree(Hypergraph.from_name_sets([["a"]]), t_fig)


class TestPathUnionJoin:
    def test_fig_tree(self, g_fig, t_fig):
        assert path_union_join(t_fig) == naive_atom_graph(g_fig, atoms(g_fig))

    def test_single_edge_tree(self):
        t = LabeledSetTree([frozenset({0, 1}), frozenset({1, 2})], [(0, 1)])
        assert path_union_join(t).edges == ((0, 1),)

    def test_nested_labels_far_edge(self):
        # path X - Y - Z with labels {1} then {1,2}: X & Z = {1} matches the
        # outer label, so the far pair joins
        x, y, z = frozenset({1, 3}), frozenset({1, 2, 4}), frozenset({1, 2, 5})
        t = LabeledSetTree([x, y, z], [(0, 1), (1, 2)])
        ag = path_union_join(t)
        assert len(ag.edges) == 3

    def test_no_matching_inner_label(self):
        # labels {1}, {2}; the far intersection is empty and matches nothing
        x, y, z = frozenset({1, 3}), frozenset({1, 2}), frozenset({2, 5})
        t = LabeledSetTree([x, y, z], [(0, 1), (1, 2)])
        assert len(path_union_join(t).edges) == 2

    def test_invariant_under_join_tree_choice(self):
        rng = random.Random(41)
        for _ in range(30):
            h, grown = grow_random_join_tree(rng, max_p=6)
            lw = line_graph_weighted(h)
            complete = {}
            for i in range(h.p):
                for j in range(i + 1, h.p):
                    complete[(i, j)] = len(h.hyperedges[i] & h.hyperedges[j])
            from sepdec import WeightedEdgeGraph

            kw = WeightedEdgeGraph(h.hyperedges, complete)
            trees = enumerate_max_weight_spanning_trees(kw, max_trees=3000)
            results = {
                path_union_join(LabeledSetTree(h.hyperedges, pairs)) for pairs in trees
            }
            assert len(results) == 1


class TestUnionJoinGraph:
    def test_fig_atom_hypergraph_equals_atom_graph(self, g_fig):
        h = atom_hypergraph(g_fig)
        expect = naive_atom_graph(g_fig, atoms(g_fig))
        for algo in ("forest-join", "max-weight", "min-weight"):
            assert union_join_graph(h, algo) == expect

    def test_path_hypergraph_no_extra_edge(self):
        h = hpath()
        uj = union_join_graph(h)
        assert uj == path_union_join(join_tree(h))
        assert len(uj.edges) == 2

    def test_single_hyperedge(self):
        assert union_join_graph(Hypergraph.from_name_sets([["a", "b"]])).edges == ()

    def test_not_acyclic_domain_error(self):
        with pytest.raises(NotAcyclicError):
            union_join_graph(Hypergraph.from_name_sets(TRIANGLE_HYPERGRAPH), "max-weight")

    def test_bad_algo(self):
        with pytest.raises(InputError):
            union_join_graph(hpath(), "naive")

    def test_three_algorithms_agree_with_oracle(self):
        rng = random.Random(42)
        for _ in range(50):
            h, _ = grow_random_join_tree(rng, max_p=8)
            oracle = path_union_join(join_tree(h))
            for algo in ("forest-join", "max-weight", "min-weight"):
                assert union_join_graph(h, algo) == oracle

    def test_disconnected_gets_all_cross_pairs(self):
        h = Hypergraph.from_name_sets([["a", "b"], ["b", "c"], ["x", "y"]])
        uj = union_join_graph(h)
        pairs = uj.edge_node_pairs()
        xy = frozenset(h.vertex_index(v) for v in ("x", "y"))
        crossing = [p for p in pairs if xy in p]
        assert len(crossing) == 2


class TestUjMinWeight:
    def test_fig_tree_with_line_graph(self, g_fig, t_fig):
        lw = line_graph_weighted(atom_hypergraph(g_fig))
        assert uj_min_weight(t_fig, lw) == naive_atom_graph(g_fig, atoms(g_fig))

    def test_single_edge_tree(self):
        t = LabeledSetTree([frozenset({0, 1}), frozenset({1, 2})], [(0, 1)])
        lw = line_graph_weighted(Hypergraph(["a", "b", "c"], [{0, 1}, {1, 2}]))
        assert uj_min_weight(t, lw).edges == ((0, 1),)

    def test_matches_path_oracle_on_random_hypergraphs(self):
        rng = random.Random(43)
        for _ in range(40):
            h, _ = grow_random_join_tree(rng, max_p=8)
            t = join_tree(h)
            assert uj_min_weight(t, line_graph_weighted(h)) == path_union_join(t)

    def test_node_mismatch_rejected(self, t_fig):
        lw = line_graph_weighted(hpath())
        with pytest.raises(InputError):
            uj_min_weight(t_fig, lw)


class TestClutterEmbedding:
    def test_nested_star(self):
        h = Hypergraph.from_name_sets([["1", "2", "3"], ["1", "2"], ["3"]])
        h2, f = clutter_embedding(h)
        named = [set(h2.names_of(e)) for e in h2.hyperedges]
        assert named == [
            {"1", "2", "3"},
            {"1", "2", "@aux:1"},
            {"3", "@aux:2"},
        ]
        assert h2.is_connected() and is_clutter(h2) and is_alpha_acyclic(h2)

    def test_connected_clutter_identity(self, g_fig):
        h = atom_hypergraph(g_fig)
        h2, f = clutter_embedding(h)
        assert h2 is h
        assert f.pairs() == tuple(zip(h.hyperedges, h.hyperedges))

    def test_two_disjoint_singletons(self):
        h = Hypergraph.from_name_sets([["1"], ["2"]])
        h2, _ = clutter_embedding(h)
        named = [set(h2.names_of(e)) for e in h2.hyperedges]
        assert named == [{"1", "@aux:common"}, {"2", "@aux:common"}]

    def test_not_acyclic_rejected(self):
        with pytest.raises(NotAcyclicError):
            clutter_embedding(Hypergraph.from_name_sets(TRIANGLE_HYPERGRAPH))

    def test_embedding_soundness(self):
        rng = random.Random(44)
        done = 0
        while done < 30:
            h, _ = grow_random_join_tree(rng, max_p=7, shrink_prob=0.45)
            if is_clutter(h) and h.is_connected():
                continue
            h2, f = clutter_embedding(h)
            assert h2.is_connected() and is_clutter(h2) and is_alpha_acyclic(h2)
            assert union_join_graph(h2) == f.apply(union_join_graph(h))
            # intersections transfer exactly (connected) or gain the shared
            # vertex (disconnected)
            shift = frozenset() if h.is_connected() else frozenset(
                {h2.vertex_index("@aux:common")}
            )
            for (x, y) in (
                (a, b) for i, a in enumerate(h.hyperedges) for b in h.hyperedges[i + 1:]
            ):
                assert f.image(x) & f.image(y) == (x & y) | shift
            # join trees transfer both ways
            t = join_tree(h)
            mapped = LabeledSetTree([f.image(s) for s in t.nodes], t.edges)
            assert verify_join_tree(h2, mapped)
            assert path_union_join(mapped) == f.apply(path_union_join(t))
            done += 1


class TestClutterBounds:
    def test_p_and_s_bounds(self):
        rng = random.Random(45)
        done = 0
        while done < 25:
            h, _ = grow_random_join_tree(rng, max_p=8, shrink_prob=0.0)
            if not is_clutter(h):
                continue
            g2 = two_section(h)
            t = join_tree(h)
            st = decomposition_stats(t, g2)
            assert st.p <= h.n
            assert st.s <= g2.n + g2.m
            done += 1

    def test_clutter_hyperedges_are_maximal_cliques_of_two_section(self):
        rng = random.Random(46)
        done = 0
        while done < 25:
            h, _ = grow_random_join_tree(rng, max_p=7, shrink_prob=0.0)
            if not is_clutter(h):
                continue
            g2 = two_section(h)
            assert is_chordal(g2)
            assert sorted(h.hyperedges, key=sorted) == bron_kerbosch_maximal_cliques(g2)
            done += 1

    def test_atom_hypergraph_round_trip(self):
        rng = random.Random(47)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(1, 9), 0.35)
            h = atom_hypergraph(g)
            again = atom_hypergraph(two_section(h))
            assert set(again.hyperedges) == set(h.hyperedges)


class TestGrownTreesAreJoinTrees:
    def test_generator_soundness(self):
        rng = random.Random(48)
        for _ in range(40):
            h, grown = grow_random_join_tree(rng)
            assert verify_join_tree(h, grown)
            assert running_intersection_ok(list(grown.nodes), grown.edges)
            assert is_alpha_acyclic(h)
