"""Clique-minimal-separator decomposition and union join graphs.

Atoms, atom trees, and atom graphs of arbitrary graphs; join trees and union
join graphs of alpha-acyclic hypergraphs; with the naive/path-walk oracles
built in for cross-verification.  Hot kernels run in a compiled extension
when available (see ``sepdec.backend_name``).
"""

from ._kernels import available_backends, backend_name, set_backend
from .atomgraph import (
    AtomGraph,
    SubsetRelation,
    atom_graph_max_weight,
    components_of_separator,
    enumerate_max_weight_spanning_trees,
    forest_join,
    forest_join_diff,
    naive_atom_graph,
    subset_relation,
    union_max_weight,
)
from .chordality import Triangulation, clique_tree, is_chordal, mcs, mcs_m
from .decomposition import (
    DecompositionStats,
    atom_completion,
    atom_hypergraph,
    atom_tree,
    atoms,
    decomposition_stats,
)
from .errors import (
    DisconnectedError,
    DomainError,
    InputError,
    NotAcyclicError,
    NotChordalError,
    ParseError,
    SepdecError,
)
from .graph import (
    Graph,
    VertexSet,
    WeightedEdgeGraph,
    bron_kerbosch_maximal_cliques,
    connected_components,
    full_components,
    is_clique,
    is_minimal_separator,
    is_separator_between,
    neighborhood,
    two_pairs,
    weighted_intersection_graph,
)
from .hypergraph import (
    Hypergraph,
    HyperedgeMapping,
    clutter_embedding,
    is_alpha_acyclic,
    is_clutter,
    join_tree,
    line_graph_weighted,
    path_union_join,
    two_section,
    uj_min_weight,
    union_join_graph,
    verify_join_tree,
)
from .serialize import parse_graph, parse_hypergraph
from .settree import LabeledSetGraph, LabeledSetTree

__version__ = "0.1.0"
