"""Command-line front end.

Commands compose through files and pipes: edge lists in, edge lists or
JSON/CSV/DOT reports out. Identical inputs, flags and seed produce
byte-identical output (floats are printed with 6 significant digits).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields
from typing import IO, Optional, Sequence

from . import contraction, estimator, generators, graph, searchinfo
from .errors import NetskelError

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def _round6(x: float) -> float:
    return float(f"{x:.6g}")


def _roundtree(obj):
    if isinstance(obj, float):
        return _round6(obj)
    if isinstance(obj, dict):
        return {k: _roundtree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_roundtree(v) for v in obj]
    return obj


def _emit_json(obj, out: IO[str]) -> None:
    json.dump(_roundtree(obj), out, indent=2)
    out.write("\n")


def _emit_csv(header: str, rows, out: IO[str]) -> None:
    out.write(header + "\n")
    for row in rows:
        out.write(
            ",".join(f"{v:.6g}" if isinstance(v, float) else str(v) for v in row)
            + "\n"
        )


def _read_graph(path: str, stdin: IO[str]) -> graph.Graph:
    if path == "-":
        return graph.load_edge_list(stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return graph.load_edge_list(fh.read())


def _parse_constants(pairs: Optional[Sequence[str]]) -> estimator.ScalingConstants:
    if not pairs:
        return estimator.ScalingConstants()
    valid = {f.name for f in fields(estimator.ScalingConstants)}
    overrides = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or key not in valid:
            raise NetskelError(f"unknown constant override {pair!r}")
        overrides[key] = float(value)
    return estimator.ScalingConstants(**overrides)


def _simplification_dict(
    simp: contraction.SimplifiedNetwork,
    info: contraction.SimplifiedSearchInfo,
    trial_index: Optional[int],
) -> dict:
    return {
        "skeleton_nodes": simp.skeleton.node_count,
        "skeleton_edges": [list(l) for l in simp.skeleton.links],
        "supernode_members": [
            [simp.original.labels[m] for m in sn.members] for sn in simp.supernodes
        ],
        "h_skeleton": info.h_skeleton,
        "h_supernodes": list(info.h_supernodes),
        "h_simp": info.h_simp,
        "trial_index": trial_index,
    }


def _ordered_links(g: graph.Graph, strategy: str, seed: int) -> list[graph.Link]:
    if strategy == "degree":
        return contraction.order_links_degree(g)
    return contraction.order_links_random(g, seed)


def _cmd_info(args, stdin, stdout) -> int:
    g = _read_graph(args.input, stdin)
    count, _ = graph.connected_components(g)
    _emit_json(
        {
            "n": g.node_count,
            "l": g.link_count,
            "cyclomatic": graph.cyclomatic_number(g),
            "components": count,
        },
        stdout,
    )
    return EXIT_OK


def _cmd_search_info(args, stdin, stdout) -> int:
    g = _read_graph(args.input, stdin)
    report = searchinfo.total_search_information(g, with_pairs=args.pairs)
    if args.format == "csv":
        if not args.pairs:
            raise NetskelError("csv output for search-info requires --pairs")
        assert report.pair_bits is not None
        rows = (
            (g.labels[s], g.labels[d], report.pair_bits[s][d])
            for s in range(g.node_count)
            for d in range(g.node_count)
            if s != d
        )
        _emit_csv("source_label,dest_label,bits", rows, stdout)
        return EXIT_OK
    doc = {
        "n": report.node_count,
        "l": report.link_count,
        "total_bits": report.total_bits,
        "average_bits": report.average_bits,
        "per_source_bits": list(report.per_source_bits),
    }
    if args.pairs:
        doc["pairs"] = [list(row) for row in report.pair_bits]  # type: ignore[union-attr]
    _emit_json(doc, stdout)
    return EXIT_OK


def _cmd_contract(args, stdin, stdout) -> int:
    g = _read_graph(args.input, stdin)
    simp = contraction.tree_contract(g, _ordered_links(g, args.strategy, args.seed))
    if args.format == "dot":
        weights = [len(sn.members) for sn in simp.supernodes]
        stdout.write(graph.to_dot(simp.skeleton, weights))
        return EXIT_OK
    info = contraction.simplified_search_information(simp)
    _emit_json(_simplification_dict(simp, info, None), stdout)
    return EXIT_OK


def _cmd_minimize(args, stdin, stdout) -> int:
    g = _read_graph(args.input, stdin)
    result = contraction.minimize_h_simp(g, args.trials, args.seed)
    if args.format == "csv":
        rows = (
            (s.trial, s.skeleton_nodes, s.h_skeleton, s.h_supernodes, s.h_simp)
            for s in result.samples
        )
        _emit_csv("trial,skeleton_nodes,h_skeleton,h_supernodes,h_simp", rows, stdout)
        return EXIT_OK
    if args.format == "dot":
        weights = [len(sn.members) for sn in result.best.supernodes]
        stdout.write(graph.to_dot(result.best.skeleton, weights))
        return EXIT_OK
    _emit_json(
        {
            "trials": args.trials,
            "best": _simplification_dict(result.best, result.best_info, result.best_trial),
            "worst": _simplification_dict(result.worst, result.worst_info, result.worst_trial),
        },
        stdout,
    )
    return EXIT_OK


def _cmd_estimate(args, stdin, stdout) -> int:
    g = _read_graph(args.input, stdin)
    constants = _parse_constants(args.constants)
    simp = contraction.tree_contract(g, contraction.order_links_degree(g))
    if simp.skeleton.node_count <= 1:
        h_skeleton = 0.0
    else:
        h_skeleton = searchinfo.total_search_information(simp.skeleton).total_bits
    est = estimator.skeleton_estimate(
        h_skeleton, simp.skeleton.node_count, g.node_count, constants
    )
    _emit_json(
        {
            "n_original": g.node_count,
            "n_skeleton": simp.skeleton.node_count,
            "h_skeleton": est.h_skeleton,
            "ratio": est.ratio,
            "estimate_bits": est.estimate_bits,
            "low_confidence": est.low_confidence,
        },
        stdout,
    )
    return EXIT_OK


def _cmd_randomize(args, stdin, stdout) -> int:
    g = _read_graph(args.input, stdin)
    attempts = args.attempts if args.attempts is not None else 10 * g.link_count
    rewired = generators.rewire_degree_preserving(g, attempts, args.seed)
    stdout.write(graph.write_edge_list(rewired))
    return EXIT_OK


def _cmd_gen(args, stdin, stdout) -> int:
    if args.kind == "ring":
        g = generators.gen_ring(args.n)
    elif args.kind == "chain":
        g = generators.gen_chain(args.n)
    else:
        g = generators.gen_random_tree(args.n, args.seed)
    if args.format == "dot":
        stdout.write(graph.to_dot(g))
    else:
        stdout.write(graph.write_edge_list(g))
    return EXIT_OK


def _cmd_tree_scaling(args, stdin, stdout) -> int:
    rows, fit = generators.tree_scaling_experiment(
        args.min, args.max, args.step, args.samples, args.seed
    )
    if args.format == "csv":
        _emit_csv(
            "n,mean_bits,std_bits,samples",
            ((r.n, r.mean_bits, r.std_bits, r.samples) for r in rows),
            stdout,
        )
        return EXIT_OK
    doc = {
        "rows": [
            {"n": r.n, "mean_bits": r.mean_bits, "std_bits": r.std_bits, "samples": r.samples}
            for r in rows
        ],
        "fit": None
        if fit is None
        else {
            "amplitude": fit.amplitude,
            "exponent": fit.exponent,
            "r_squared": fit.r_squared,
            "n_points": len(rows),
        },
    }
    _emit_json(doc, stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netskel",
        description="Search information, tree-contraction and scaling estimation "
        "for undirected simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="edge-list file, or '-' for stdin")

    def add_format(p, choices=("json", "csv", "dot")):
        p.add_argument("--format", choices=choices, default="json")

    p = sub.add_parser("info", help="node/link counts, cyclomatic number, components")
    add_input(p)
    add_format(p, choices=("json",))
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("search-info", help="total/average search information")
    add_input(p)
    p.add_argument("--pairs", action="store_true", help="emit the full pair matrix")
    add_format(p, choices=("json", "csv"))
    p.set_defaults(func=_cmd_search_info)

    p = sub.add_parser("contract", help="one tree-contraction pass")
    add_input(p)
    p.add_argument("--strategy", choices=("random", "degree"), default="degree")
    p.add_argument("--seed", type=int, default=42)
    add_format(p, choices=("json", "dot"))
    p.set_defaults(func=_cmd_contract)

    p = sub.add_parser("minimize", help="search orderings for extremal h_simp")
    add_input(p)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=42)
    add_format(p)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("estimate", help="skeleton-based estimate of total H")
    add_input(p)
    p.add_argument(
        "--constants",
        action="append",
        metavar="KEY=VALUE",
        help="override a scaling constant (repeatable)",
    )
    add_format(p, choices=("json",))
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("randomize", help="degree-preserving connected rewiring")
    add_input(p)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--attempts", type=int, default=None, help="default 10*L")
    p.set_defaults(func=_cmd_randomize)

    p = sub.add_parser("gen", help="generate ring/chain/tree edge lists")
    p.add_argument("kind", choices=("ring", "chain", "tree"))
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=42)
    add_format(p, choices=("edges", "dot"))
    p.set_defaults(func=_cmd_gen, format="edges")

    p = sub.add_parser("tree-scaling", help="random-tree scaling experiment")
    p.add_argument("--min", type=int, default=10)
    p.add_argument("--max", type=int, default=100)
    p.add_argument("--step", type=int, default=10)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    add_format(p, choices=("json", "csv"))
    p.set_defaults(func=_cmd_tree_scaling)

    return parser


def run(
    argv: Optional[Sequence[str]] = None,
    stdin: Optional[IO[str]] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, stdin, stdout)
    except NetskelError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
