import pytest

from sepdec import Graph, LabeledSetTree

# 13-vertex working example: two 4-cycles of clusters glued through vertex 1
G_FIG_EDGES = [
    ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6"),
    ("1", "7"), ("7", "8"), ("1", "8"), ("1", "9"), ("2", "4"), ("2", "7"),
    ("1", "3"), ("3", "7"), ("3", "5"), ("10", "11"), ("11", "12"),
    ("12", "13"), ("10", "13"), ("1", "10"), ("1", "11"),
]

ATOM_NAMES = {
    "A": {"1", "2", "3", "4", "5", "6"},
    "B": {"1", "2", "3", "7"},
    "C": {"1", "7", "8"},
    "D": {"1", "9"},
    "E": {"1", "10", "11"},
    "F": {"10", "11", "12", "13"},
}


@pytest.fixture(scope="session")
def g_fig() -> Graph:
    return Graph.from_edges(G_FIG_EDGES)


@pytest.fixture(scope="session")
def fig_atoms(g_fig) -> dict[str, frozenset[int]]:
    return {
        key: frozenset(g_fig.index(x) for x in names)
        for key, names in ATOM_NAMES.items()
    }


@pytest.fixture(scope="session")
def t_fig(fig_atoms) -> LabeledSetTree:
    """The left atom tree of the working example: AB, BC, AD, DE, EF."""
    order = ["A", "B", "C", "D", "E", "F"]
    nodes = [fig_atoms[k] for k in order]
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5)]
    return LabeledSetTree(nodes, edges)


def vs(g: Graph, *names: str) -> frozenset[int]:
    return frozenset(g.index(x) for x in names)
