"""Command-line front end.

    sepdec atoms FILE                 list the atoms (per component)
    sepdec atom-tree FILE             atom tree / forest with separators
    sepdec atom-graph [--algo forest-join|max-weight|naive] FILE
    sepdec union-join [--algo forest-join|max-weight|min-weight] FILE
    sepdec check [--kind graph|hypergraph] FILE

Common flags: --format text|json|dot, --verify (atom-graph and union-join:
recompute via the naive oracle / the path-walk oracle and exit 3 on any
mismatch, primary output unchanged), --hypergraph-convention (atom-graph on
a disconnected graph: one merged graph with all inter-component atom pairs
instead of per-component graphs).

Exit codes: 0 ok, 1 parse error, 2 domain error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import serialize
from .atomgraph import (
    atom_graph_max_weight,
    forest_join,
    naive_atom_graph,
    subset_relation,
)
from .chordality import is_chordal
from .decomposition import atom_tree, atoms, weighted_intersection_graph
from .errors import ParseError, SepdecError
from .graph import Graph, connected_components
from .hypergraph import (
    UNION_JOIN_ALGORITHMS,
    is_alpha_acyclic,
    is_clutter,
    join_tree,
    path_union_join,
    union_join_graph,
)
from .settree import LabeledSetGraph, LabeledSetTree

ATOM_GRAPH_ALGORITHMS = ("forest-join", "max-weight", "naive")


@dataclass
class RunConfig:
    command: str
    path: str
    algo: str | None = None
    fmt: str = "text"
    verify: bool = False
    hypergraph_convention: bool = False
    kind: str = "graph"


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _components(g: Graph) -> list[tuple[list[int], Graph]]:
    return [(sorted(c), g.induced(c)) for c in connected_components(g)]


def _lift(kept: list[int], sets) -> list[frozenset[int]]:
    return [frozenset(kept[i] for i in s) for s in sets]


def _yesno(b: bool) -> str:
    return "yes" if b else "no"


def _component_atom_graph(sub: Graph, algo: str) -> LabeledSetGraph:
    if algo == "forest-join":
        t = atom_tree(sub)
        return forest_join(t, subset_relation(t))
    if algo == "max-weight":
        return atom_graph_max_weight(weighted_intersection_graph(atoms(sub)))
    return naive_atom_graph(sub, atoms(sub))


def _graph_diff(computed: LabeledSetGraph, oracle: LabeledSetGraph, names) -> str:
    got = computed.edge_node_pairs()
    want = oracle.edge_node_pairs()

    def fmt(pair):
        a, b = sorted(pair, key=sorted)
        return f"{serialize.set_text(a, names)} -- {serialize.set_text(b, names)}"

    lines = [f"only in computed output: {fmt(p)}" for p in sorted(got - want, key=lambda p: sorted(map(sorted, p)))]
    lines += [f"only in oracle output: {fmt(p)}" for p in sorted(want - got, key=lambda p: sorted(map(sorted, p)))]
    return "\n".join(lines)


def _render_atoms(groups, names, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "type": "atoms",
            "vertices": list(names),
            "components": [
                {"component": ci, "atoms": [serialize._set_names(a, names) for a in group]}
                for ci, group in enumerate(groups)
            ],
        }
        return serialize.to_json_text(doc)
    if fmt == "dot":
        return serialize.components_to_dot([(group, [], []) for group in groups], names)
    out = []
    for ci, group in enumerate(groups):
        if len(groups) > 1:
            out.append(f"# component {ci}\n")
        out.append(serialize.sets_to_text(group, names))
    return "".join(out)


def _render_tree_parts(parts, names, g, fmt: str) -> str:
    if fmt == "json":
        if len(parts) == 1:
            return serialize.to_json_text(serialize.tree_to_json(parts[0], names, g))
        return serialize.to_json_text(
            {
                "type": "forest",
                "components": [serialize.tree_to_json(t, names, g) for t in parts],
            }
        )
    if fmt == "dot":
        return serialize.components_to_dot([(t.nodes, t.edges, t.labels) for t in parts], names)
    out = []
    for ci, t in enumerate(parts):
        if len(parts) > 1:
            out.append(f"# component {ci}\n")
        out.append(serialize.tree_to_text(t, names))
    return "".join(out)


def _render_graph_parts(parts, names, fmt: str) -> str:
    if fmt == "json":
        if len(parts) == 1:
            return serialize.to_json_text(serialize.set_graph_to_json(parts[0], names))
        return serialize.to_json_text(
            {
                "type": "graph-components",
                "components": [serialize.set_graph_to_json(p, names) for p in parts],
            }
        )
    if fmt == "dot":
        return serialize.components_to_dot([(p.nodes, p.edges, p.separators) for p in parts], names)
    out = []
    for ci, p in enumerate(parts):
        if len(parts) > 1:
            out.append(f"# component {ci}\n")
        out.append(serialize.set_graph_to_text(p, names))
    return "".join(out)


def run(cfg: RunConfig) -> tuple[int, str, str]:
    """Execute one command; returns (exit code, stdout text, stderr text)."""
    try:
        return _dispatch(cfg)
    except ParseError as exc:
        return 1, "", f"error: {exc}"
    except OSError as exc:
        return 1, "", f"error: {exc}"
    except SepdecError as exc:
        return 2, "", f"error: {exc}"


def _dispatch(cfg: RunConfig) -> tuple[int, str, str]:
    text = _read(cfg.path)
    if cfg.command == "union-join":
        return _run_union_join(cfg, text)
    if cfg.command == "check" and cfg.kind == "hypergraph":
        h = serialize.parse_hypergraph(text)
        doc = {
            "vertices": h.n,
            "hyperedges": h.p,
            "connected": h.is_connected(),
            "alpha_acyclic": is_alpha_acyclic(h),
            "clutter": is_clutter(h),
        }
        return 0, _render_check(doc, "hypergraph", cfg.fmt), ""
    g = serialize.parse_graph(text)
    if cfg.command == "check":
        doc = {
            "vertices": g.n,
            "edges": g.m,
            "connected": len(connected_components(g)) <= 1,
            "chordal": is_chordal(g),
        }
        return 0, _render_check(doc, "graph", cfg.fmt), ""
    comps = _components(g)
    if cfg.command == "atoms":
        groups = [_lift(kept, atoms(sub)) for kept, sub in comps]
        return 0, _render_atoms(groups, g.names, cfg.fmt), ""
    if cfg.command == "atom-tree":
        parts = []
        for kept, sub in comps:
            t = atom_tree(sub)
            parts.append(LabeledSetTree(_lift(kept, t.nodes), t.edges))
        return 0, _render_tree_parts(parts, g.names, g, cfg.fmt), ""
    return _run_atom_graph(cfg, g, comps)


def _run_atom_graph(cfg: RunConfig, g: Graph, comps) -> tuple[int, str, str]:
    algo = cfg.algo or "forest-join"
    parts = []
    diffs = []
    for kept, sub in comps:
        ag = _component_atom_graph(sub, algo)
        if cfg.verify:
            oracle = naive_atom_graph(sub, atoms(sub))
            if ag != oracle:
                diffs.append(_graph_diff(ag, oracle, sub.names))
        parts.append(LabeledSetGraph(_lift(kept, ag.nodes), ag.edges))
    if cfg.hypergraph_convention and len(parts) > 1:
        all_nodes: list[frozenset[int]] = []
        pairs: list[tuple[int, int]] = []
        offsets = []
        for p in parts:
            offsets.append(len(all_nodes))
            all_nodes.extend(p.nodes)
        for off, p in zip(offsets, parts):
            pairs.extend((off + i, off + j) for i, j in p.edges)
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                for i in range(len(parts[a].nodes)):
                    for j in range(len(parts[b].nodes)):
                        pairs.append((offsets[a] + i, offsets[b] + j))
        parts = [LabeledSetGraph(all_nodes, pairs)]
    out = _render_graph_parts(parts, g.names, cfg.fmt)
    if diffs:
        return 3, out, "verification mismatch against the naive oracle:\n" + "\n".join(diffs)
    return 0, out, ""


def _run_union_join(cfg: RunConfig, text: str) -> tuple[int, str, str]:
    h = serialize.parse_hypergraph(text)
    algo = cfg.algo or "forest-join"
    result = union_join_graph(h, algo)
    out = _render_graph_parts([result], h.vertices, cfg.fmt)
    if cfg.verify:
        oracle = path_union_join(join_tree(h))
        if result != oracle:
            diff = _graph_diff(result, oracle, h.vertices)
            return 3, out, "verification mismatch against the path-walk oracle:\n" + diff
    return 0, out, ""


def _render_check(doc: dict, kind: str, fmt: str) -> str:
    if fmt == "dot":
        raise SepdecError("dot output is not supported for check")
    if fmt == "json":
        return serialize.to_json_text({"type": "check", "kind": kind, **doc})
    lines = [
        f"{key.replace('_', '-')}: {_yesno(value) if isinstance(value, bool) else value}"
        for key, value in doc.items()
    ]
    return "".join(line + "\n" for line in lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepdec",
        description="Clique-minimal-separator decomposition and union join graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "dot"), default="text", dest="fmt")
        p.add_argument("path", metavar="FILE")

    common(sub.add_parser("atoms", help="list the atoms of each component"))
    common(sub.add_parser("atom-tree", help="emit an atom tree (forest when disconnected)"))

    p_ag = sub.add_parser("atom-graph", help="emit the atom graph")
    p_ag.add_argument("--algo", choices=ATOM_GRAPH_ALGORITHMS, default="forest-join")
    p_ag.add_argument("--verify", action="store_true", help="cross-check against the naive oracle")
    p_ag.add_argument(
        "--hypergraph-convention",
        action="store_true",
        help="on disconnected input, link component atom graphs with all cross pairs",
    )
    common(p_ag)

    p_uj = sub.add_parser("union-join", help="emit the union join graph of a hypergraph")
    p_uj.add_argument("--algo", choices=UNION_JOIN_ALGORITHMS, default="forest-join")
    p_uj.add_argument("--verify", action="store_true", help="cross-check against the path-walk oracle")
    common(p_uj)

    p_check = sub.add_parser("check", help="report chordality / acyclicity / clutter status")
    p_check.add_argument("--kind", choices=("graph", "hypergraph"), default="graph")
    common(p_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        path=args.path,
        algo=getattr(args, "algo", None),
        fmt=args.fmt,
        verify=getattr(args, "verify", False),
        hypergraph_convention=getattr(args, "hypergraph_convention", False),
        kind=getattr(args, "kind", "graph"),
    )
    code, out, err = run(cfg)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
