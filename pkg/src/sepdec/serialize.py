"""Input parsing and output rendering.

File formats
------------
Graph files: one edge per line as "u v"; a line with a single token declares
an isolated vertex; '#' starts a comment line; duplicate edges collapse;
self-loops are rejected.  Hypergraph files: one hyperedge per line as
whitespace-separated vertex names; duplicate names within a line collapse;
duplicate hyperedges and blank lines are rejected.  Names starting with
"@aux:" are reserved for the clutter embedding and rejected on input.

JSON documents carry the vertex list, nodes as vertex-name arrays (ordered
by internal index), edges as node-index pairs with separator name arrays,
and for trees a stats block (p, s, s_delta, label_size_sum); they parse back
to equal objects.  DOT output is deterministic, and no label is omitted (an
empty separator renders as "{}").
"""

from __future__ import annotations

import json
from typing import Iterable

from .decomposition import decomposition_stats
from .errors import InputError, ParseError
from .graph import Graph
from .hypergraph import AUX_PREFIX, Hypergraph
from .settree import LabeledSetGraph, LabeledSetTree


def _check_name(token: str, lineno: int) -> str:
    if token.startswith(AUX_PREFIX):
        raise ParseError(f"vertex name {token!r} uses the reserved prefix {AUX_PREFIX!r}", lineno)
    return token


def parse_graph(text: str) -> Graph:
    """Parse the edge-list graph format; errors carry the line number."""
    order: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            order.setdefault(_check_name(tokens[0], lineno))
        elif len(tokens) == 2:
            u, v = (_check_name(t, lineno) for t in tokens)
            if u == v:
                raise ParseError(f"self-loop at vertex {u!r}", lineno)
            order.setdefault(u)
            order.setdefault(v)
            edges.append((u, v))
        else:
            raise ParseError(f"expected 'u v' or a single vertex name, got {len(tokens)} tokens", lineno)
    return Graph(order.keys(), edges)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the hyperedge-per-line format; errors carry the line number."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    sets: list[list[str]] = []
    seen: dict[frozenset[str], int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            raise ParseError("empty line inside hypergraph body", lineno)
        tokens = [_check_name(t, lineno) for t in line.split()]
        uniq = list(dict.fromkeys(tokens))
        key = frozenset(uniq)
        if key in seen:
            raise ParseError(f"duplicate hyperedge (same as line {seen[key]})", lineno)
        seen[key] = lineno
        sets.append(uniq)
    return Hypergraph.from_name_sets(sets)


def _set_names(members: Iterable[int], names: tuple[str, ...]) -> list[str]:
    return [names[i] for i in sorted(members)]


def set_text(members: Iterable[int], names: tuple[str, ...]) -> str:
    return "{" + ",".join(_set_names(members, names)) + "}"


# --- JSON ---------------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    return {"type": "graph", "vertices": list(g.names), "edges": [list(e) for e in g.edges()]}


def graph_from_json(obj: dict) -> Graph:
    if obj.get("type") != "graph":
        raise InputError("expected a graph document")
    names = obj["vertices"]
    return Graph(names, [(names[i], names[j]) for i, j in obj["edges"]])


def _nodes_edges_json(nodes, edges, seps, names):
    return (
        [_set_names(s, names) for s in nodes],
        [
            {"ends": [i, j], "separator": _set_names(sep, names)}
            for (i, j), sep in zip(edges, seps)
        ],
    )


def tree_to_json(t: LabeledSetTree, names: tuple[str, ...], graph=None) -> dict:
    nodes, edges = _nodes_edges_json(t.nodes, t.edges, t.labels, names)
    doc = {"type": "set-tree", "vertices": list(names), "nodes": nodes, "edges": edges}
    if graph is not None:
        st = decomposition_stats(t, graph)
        doc["stats"] = {
            "p": st.p,
            "s": st.s,
            "s_delta": st.s_delta,
            "label_size_sum": st.label_size_sum,
        }
    return doc


def tree_from_json(obj: dict) -> tuple[LabeledSetTree, tuple[str, ...]]:
    if obj.get("type") != "set-tree":
        raise InputError("expected a set-tree document")
    names = tuple(obj["vertices"])
    index = {name: i for i, name in enumerate(names)}
    nodes = [{index[name] for name in node} for node in obj["nodes"]]
    edges = [tuple(e["ends"]) for e in obj["edges"]]
    return LabeledSetTree(nodes, edges), names


def set_graph_to_json(g: LabeledSetGraph, names: tuple[str, ...]) -> dict:
    nodes, edges = _nodes_edges_json(g.nodes, g.edges, g.separators, names)
    return {
        "type": "set-graph",
        "vertices": list(names),
        "nodes": nodes,
        "edges": edges,
        "stats": {"p": len(g.nodes), "s": sum(len(s) for s in g.nodes)},
    }


def set_graph_from_json(obj: dict) -> tuple[LabeledSetGraph, tuple[str, ...]]:
    if obj.get("type") != "set-graph":
        raise InputError("expected a set-graph document")
    names = tuple(obj["vertices"])
    index = {name: i for i, name in enumerate(names)}
    nodes = [{index[name] for name in node} for node in obj["nodes"]]
    edges = [tuple(e["ends"]) for e in obj["edges"]]
    return LabeledSetGraph(nodes, edges), names


def to_json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# --- text ---------------------------------------------------------------


def sets_to_text(sets, names) -> str:
    return "".join(set_text(s, names) + "\n" for s in sets)


def _nodes_edges_text(nodes, edges, seps, names) -> str:
    lines = [f"n{i}: {set_text(s, names)}" for i, s in enumerate(nodes)]
    lines += [
        f"n{i} -- n{j}: {set_text(sep, names)}"
        for (i, j), sep in zip(edges, seps)
    ]
    return "".join(line + "\n" for line in lines)


def tree_to_text(t: LabeledSetTree, names) -> str:
    return _nodes_edges_text(t.nodes, t.edges, t.labels, names)


def set_graph_to_text(g: LabeledSetGraph, names) -> str:
    return _nodes_edges_text(g.nodes, g.edges, g.separators, names)


# --- DOT ----------------------------------------------------------------


def _dot(nodes, edges, seps, names, prefix="n") -> list[str]:
    lines = [f'  {prefix}{i} [label="{set_text(s, names)}"];' for i, s in enumerate(nodes)]
    lines += [
        f'  {prefix}{i} -- {prefix}{j} [label="{set_text(sep, names)}"];'
        for (i, j), sep in zip(edges, seps)
    ]
    return lines


def tree_to_dot(t: LabeledSetTree, names) -> str:
    body = _dot(t.nodes, t.edges, t.labels, names)
    return "graph sepdec {\n  node [shape=box];\n" + "\n".join(body) + "\n}\n"


def set_graph_to_dot(g: LabeledSetGraph, names) -> str:
    body = _dot(g.nodes, g.edges, g.separators, names)
    return "graph sepdec {\n  node [shape=box];\n" + "\n".join(body) + "\n}\n"


def components_to_dot(parts: list[tuple], names) -> str:
    """One DOT graph holding several trees/graphs (a forest rendering).

    ``parts`` holds (nodes, edges, separators) triples; node ids are
    prefixed per component so they stay unique.
    """
    lines = ["graph sepdec {", "  node [shape=box];"]
    for ci, (nodes, edges, seps) in enumerate(parts):
        lines.extend(_dot(nodes, edges, seps, names, prefix=f"c{ci}_n"))
    return "\n".join(lines) + "\n}\n"
