"""Command-line front end.

Subcommands: embody, blend, verify, sequence, oracle. Exit codes: 0 on
success, 2 on validation errors (including bad arguments and unreadable
files), 3 when a size cap is exceeded, 4 when a verification sweep fails.

Configuration precedence for the caps: command-line flags, then the
environment variables CHROMABLEND_MATERIALIZATION_CAP / CHROMABLEND_ORACLE_CAP,
then the built-in defaults. All output is deterministic byte for byte for a
given command line and configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import blending, graphio, verify
from .cluster import ColourCluster, ColourLabel, cluster_literal, parse_cluster
from .embodiment import (
    DEFAULT_MATERIALIZATION_CAP,
    build_max_embodiment,
    build_min_chromatic_embodiment,
    build_min_proper_embodiment,
    epsilon_minus,
    epsilon_plus,
)
from .errors import CapExceededError, TerminalStateError, ValidationError
from .graph import ColouredGraph, apply_colouring
from .oracle import DEFAULT_ORACLE_CAP, chromatic_colouring, graph_stats
from .corpus import verification_corpus

_ENV_PREFIX = "CHROMABLEND_"


@dataclass(frozen=True)
class RunConfig:
    """Resolved run configuration (flags > environment > defaults)."""

    materialization_cap: int = DEFAULT_MATERIALIZATION_CAP
    oracle_vertex_cap: int = DEFAULT_ORACLE_CAP
    output_format: str = "text"
    max_l: int = 5
    max_r: int = 3

    def __post_init__(self) -> None:
        if self.materialization_cap < 1 or self.oracle_vertex_cap < 1:
            raise ValidationError("caps must be >= 1")
        if self.max_l < 2:
            raise ValidationError("sweep bound max_l must be >= 2")
        if self.max_r < 1:
            raise ValidationError("sweep bound max_r must be >= 1")
        if self.output_format not in ("text", "json", "dot"):
            raise ValidationError(f"unknown output format {self.output_format!r}")


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise ValidationError(f"{_ENV_PREFIX}{name} must be an integer, got {raw!r}") from exc


def resolve_config(args: argparse.Namespace) -> RunConfig:
    mat = getattr(args, "materialization_cap", None)
    if mat is None:
        mat = _env_int("MATERIALIZATION_CAP")
    orc = getattr(args, "oracle_cap", None)
    if orc is None:
        orc = _env_int("ORACLE_CAP")
    max_l = getattr(args, "max_l", None)
    max_r = getattr(args, "max_r", None)
    return RunConfig(
        materialization_cap=mat if mat is not None else DEFAULT_MATERIALIZATION_CAP,
        oracle_vertex_cap=orc if orc is not None else DEFAULT_ORACLE_CAP,
        output_format=getattr(args, "format", "text") or "text",
        max_l=max_l if max_l is not None else 5,
        max_r=max_r if max_r is not None else 3,
    )


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> ColouredGraph:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return graphio.parse_graph_json(text)
    return graphio.parse_graph_text(text)


def _parse_colouring_file(text: str, graph: ColouredGraph) -> ColouredGraph:
    """Colour lines 'v i,j,k' (a leading 'c' token is also accepted)."""
    labels: list[Optional[ColourLabel]] = [None] * graph.n
    for row in text.splitlines():
        row = row.strip()
        if not row or row.startswith("#"):
            continue
        parts = row.split()
        if parts and parts[0] == "c":
            parts = parts[1:]
        if len(parts) != 2:
            raise ValidationError(f"malformed colouring line {row!r}")
        try:
            v = int(parts[0])
            members = tuple(int(t) for t in parts[1].split(","))
        except ValueError as exc:
            raise ValidationError(f"malformed colouring line {row!r}") from exc
        if not (0 <= v < graph.n):
            raise ValidationError(f"colouring line references missing vertex {v}")
        labels[v] = ColourLabel(members)
    return graph.with_labels(tuple(labels))


def _render_graph(graph: ColouredGraph, fmt: str) -> str:
    if fmt == "json":
        return graphio.graph_to_json(graph)
    if fmt == "dot":
        return graphio.graph_to_dot(graph)
    return graphio.graph_to_text(graph)


def cmd_embody(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    cluster = parse_cluster(args.cluster)
    builders = {
        "max": build_max_embodiment,
        "min-chromatic": build_min_chromatic_embodiment,
        "min-proper": build_min_proper_embodiment,
    }
    graph = builders[args.mode](cluster, config.materialization_cap)
    report = [
        f"cluster={cluster_literal(cluster)}",
        f"mode={args.mode}",
        f"N={cluster.total_weight}",
        f"eps_plus={epsilon_plus(cluster)}",
        f"eps_minus={epsilon_minus(cluster) if cluster.num_classes >= 2 else '-'}",
        f"edges={graph.m}",
    ]
    rendered = _render_graph(graph, config.output_format)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
        print("\n".join(report))
    else:
        sys.stdout.write(rendered)
        print("\n".join(report), file=sys.stderr)
    return 0


def _blend_input(args: argparse.Namespace, config: RunConfig) -> blending.BlendTrace:
    if args.graph is not None:
        graph = _load_graph(args.graph)
        if args.colouring is not None:
            graph = _parse_colouring_file(_read_text(args.colouring), graph)
        if not graph.is_fully_labelled:
            _, witness = chromatic_colouring(graph, config.oracle_vertex_cap)
            graph = apply_colouring(graph, witness)
        return blending.run_total_blending_from_graph(graph, config.oracle_vertex_cap)
    return blending.run_total_blending(parse_cluster(args.cluster))


def cmd_blend(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    if (args.cluster is None) == (args.graph is None):
        raise ValidationError("provide either a cluster literal or --graph FILE")
    trace = _blend_input(args, config)
    print("iteration classes vertices edges")
    for step in trace.steps:
        print(
            f"{step.iteration} {step.cluster.num_classes} "
            f"{step.vertex_count} {step.edge_count}"
        )
    iteration, count = blending.max_edge_iteration(trace)
    print(f"t_chi={trace.t_chi}")
    print(f"null_order={trace.null_order}")
    print(f"max_edge_iteration={iteration}")
    print(f"max_edge_count={count}")
    if args.trace_out:
        Path(args.trace_out).write_text(blending.trace_to_json(trace), encoding="utf-8")
    return 0


def cmd_sequence(args: argparse.Namespace) -> int:
    clusters: list[ColourCluster] = []
    if args.family == "custom":
        if not args.clusters:
            raise ValidationError("custom family needs --clusters LITERAL [LITERAL ...]")
        clusters = [parse_cluster(lit) for lit in args.clusters]
    else:
        if args.max_l is None:
            raise ValidationError(f"{args.family} family needs --max-l")
        r = 1 if args.family == "complete-graph" else args.r
        if r is None:
            raise ValidationError("uniform family needs --r")
        if r < 1:
            raise ValidationError(f"--r must be >= 1, got {r}")
        if args.min_l < 2 or args.max_l < args.min_l:
            raise ValidationError(f"bad l range {args.min_l}..{args.max_l}")
        for ell in range(args.min_l, args.max_l + 1):
            clusters.append(parse_cluster(",".join([str(r)] * ell)))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["ell", "cluster", "t_chi", "null_order", "max_edges"])
    for cluster in clusters:
        trace = blending.run_total_blending(cluster)
        _, best = blending.max_edge_iteration(trace)
        writer.writerow(
            [
                cluster.num_classes,
                cluster_literal(cluster),
                trace.t_chi,
                trace.null_order,
                best,
            ]
        )
    return 0


_ORACLE_FIELDS = ("chi", "omega", "delta", "triangle_free", "t_chi")


def cmd_oracle(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    graph = _load_graph(args.graphfile)
    wanted = _ORACLE_FIELDS if args.stats == "all" else tuple(
        t.strip().replace("-", "_") for t in args.stats.split(",") if t.strip()
    )
    for name in wanted:
        if name not in _ORACLE_FIELDS:
            raise ValidationError(
                f"unknown stat {name!r}; choose from {', '.join(_ORACLE_FIELDS)} or 'all'"
            )
    stats = graph_stats(graph, config.oracle_vertex_cap)
    if config.output_format == "json":
        import json

        payload = {name: getattr(stats, name) for name in wanted}
        print(json.dumps(payload, indent=2))
    else:
        for name in wanted:
            value = getattr(stats, name)
            if isinstance(value, bool):
                value = "true" if value else "false"
            print(f"{name}={value}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    selector = args.selector
    reports: list[verify.VerifyReport] = []
    corpus = None
    if selector in ("blend", "bounds", "mycielski", "monotone", "all"):
        corpus = verification_corpus()
    if selector in ("eps", "all"):
        reports.append(
            verify.check_eps_triple(config.max_l, config.max_r, config.materialization_cap)
        )
        reports.append(
            verify.check_min_chromatic(
                config.max_l, config.max_r, config.materialization_cap, config.oracle_vertex_cap
            )
        )
        reports.append(
            verify.check_tree_edges(config.max_l, config.max_r, config.materialization_cap)
        )
        reports.append(
            verify.check_max_embodiment_chi(
                config.max_l, config.max_r, config.materialization_cap, config.oracle_vertex_cap
            )
        )
        reports.append(verify.check_eps_equality(config.max_l, config.max_r))
        reports.append(
            verify.check_clique_edge_deletion(config.max_l, config.oracle_vertex_cap)
        )
    if selector in ("blend", "all"):
        reports.append(verify.check_blend_tchi(config.max_l, config.max_r))
        reports.append(verify.check_max_edge_observation(config.max_l, config.max_r))
        reports.append(
            verify.check_graph_blending(corpus, args.colourings, config.oracle_vertex_cap)
        )
    if selector in ("bounds", "all"):
        reports.append(verify.check_bounds(corpus, config.oracle_vertex_cap))
    if selector in ("mycielski", "all"):
        reports.append(verify.check_mycielski(corpus, config.oracle_vertex_cap))
    if selector in ("monotone", "all"):
        reports.append(
            verify.check_monotonicity(
                corpus, args.subgraph_samples, args.seed, config.oracle_vertex_cap
            )
        )
    out = io.StringIO()
    for report in reports:
        if not args.quiet:
            for line in report.lines:
                out.write(line + "\n")
    for report in reports:
        out.write(report.summary() + "\n")
    checked = sum(r.checked for r in reports)
    failed = sum(r.failed for r in reports)
    verdict = "PASS" if failed == 0 else "FAIL"
    out.write(f"VERIFY {verdict} checks={checked} failures={failed}\n")
    sys.stdout.write(out.getvalue())
    return 0 if failed == 0 else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromablend",
        description="Colour-cluster embodiments, chromatic blending, and exact colouring oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embody", help="build a graphical embodiment of a cluster")
    p.add_argument("cluster", help='cluster literal, e.g. "2,3,1"')
    p.add_argument("mode", choices=["max", "min-chromatic", "min-proper"])
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.add_argument("--materialization-cap", type=int)
    p.set_defaults(func=cmd_embody)

    p = sub.add_parser("blend", help="run the blending recursion to the null graph")
    p.add_argument("cluster", nargs="?", help="cluster literal (or use --graph)")
    p.add_argument("--graph", help="graph file; auto-coloured when uncoloured")
    p.add_argument("--colouring", help="explicit colouring file with 'v i,j' lines")
    p.add_argument("--trace-out", help="write the full JSON trace document here")
    p.add_argument("--oracle-cap", type=int)
    p.set_defaults(func=cmd_blend)

    p = sub.add_parser("verify", help="run claim-verification sweeps")
    p.add_argument(
        "selector",
        nargs="?",
        default="all",
        choices=["eps", "blend", "bounds", "mycielski", "monotone", "all"],
    )
    p.add_argument("--max-l", type=int, help="sweep bound on the class count (default 5)")
    p.add_argument("--max-r", type=int, help="sweep bound on the weights (default 3)")
    p.add_argument("--colourings", type=int, default=3)
    p.add_argument("--subgraph-samples", type=int, default=50)
    p.add_argument("--seed", default=verify.DEFAULT_VERIFY_SEED)
    p.add_argument("--quiet", action="store_true", help="summaries only")
    p.add_argument("--materialization-cap", type=int)
    p.add_argument("--oracle-cap", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="tabulate blending outcomes per family")
    p.add_argument("family", choices=["complete-graph", "uniform", "custom"])
    p.add_argument("--min-l", type=int, default=2)
    p.add_argument("--max-l", type=int)
    p.add_argument("--r", type=int, help="uniform weight (uniform family)")
    p.add_argument("--clusters", nargs="+", help="cluster literals (custom family)")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("oracle", help="exact invariants of a graph file")
    p.add_argument("graphfile")
    p.add_argument("--stats", default="all", help="comma list of chi,omega,delta,triangle-free,t-chi")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--oracle-cap", type=int)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, TerminalStateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
