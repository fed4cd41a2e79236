"""Command-line front end.

One subcommand per verified statement plus construct/inspect/generate
utilities. Reports go to stdout (text or json-lines); diagnostics to
stderr. Exit codes: 0 = completed with the expected/clean result, 1 =
completed but violations or unexpected satisfiers were found, 2 =
usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Optional

from . import constructions
from .connectivity import edge_connectivity, vertex_connectivity
from .enumeration import (GenFilter, Graph6Error, canonical_form, generation_forms,
                          graph6_decode, graph6_encode, read_graph6_stream)
from .graphs import Graph, GraphError, distance_profile, is_connected
from .subsets import independence_number, matching_number
from .verdicts import (SweepReport, hunt_special_periphery, sweep, theorem1_sweep,
                       verify_observation4)

USAGE_ERROR = 2


@dataclass
class RunConfig:
    """Validated invocation: which command plus the knobs it needs."""

    command: str
    k: int = 0
    n_max: int = 0
    input: Optional[str] = None  # path or "-" for stdin
    output_format: str = "text"
    workers: int = 1
    on_decode_error: str = "abort"
    extra: dict[str, Any] = field(default_factory=dict)


def _default_workers() -> int:
    return os.cpu_count() or 1


def _add_common(p: argparse.ArgumentParser, needs_k: bool = False,
                needs_max_n: bool = False) -> None:
    if needs_k:
        p.add_argument("--k", type=int, required=True)
    if needs_max_n:
        p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--input", default=None,
                   help="graph6 file (or '-' for stdin) replacing built-in generation")
    p.add_argument("--format", choices=["text", "json-lines"], default="text")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--on-decode-error", choices=["abort", "skip"], default="abort")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="inspect one graph")
    p.add_argument("--graph6", default=None)
    p.add_argument("--input", default=None)
    p.add_argument("--props", action="store_true")
    p.add_argument("--format", choices=["text", "json-lines"], default="text")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--on-decode-error", choices=["abort", "skip"], default="abort")

    p = sub.add_parser("construct", help="emit a named graph")
    p.add_argument("family", choices=["kss-pm", "complete", "cycle", "path",
                                      "complete-bipartite", "random"])
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--format", choices=["text", "json-lines"], default="text")

    p = sub.add_parser("gen", help="isomorph-free generation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--format", choices=["text", "json-lines"], default="text")

    for name, needs_k in [("verify-theorem1", True), ("verify-corollary2", True),
                          ("hunt-conjecture3", True)]:
        p = sub.add_parser(name)
        _add_common(p, needs_k=needs_k, needs_max_n=True)

    p = sub.add_parser("verify-cycles")
    p.add_argument("--mode", choices=["vertex", "edge"], required=True)
    _add_common(p, needs_max_n=True)

    p = sub.add_parser("verify-observation4")
    _add_common(p, needs_max_n=True)

    p = sub.add_parser("hunt-periphery")
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--periphery-size", type=int, required=True)
    _add_common(p, needs_k=True, needs_max_n=True)

    return parser


def parse_args(argv: list[str]) -> RunConfig:
    """Validated config; argparse handles usage errors with exit code 2."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(command=ns.command)
    cfg.output_format = getattr(ns, "format", "text")
    cfg.workers = max(1, getattr(ns, "workers", 1))
    cfg.on_decode_error = getattr(ns, "on_decode_error", "abort")
    cfg.input = getattr(ns, "input", None)
    if hasattr(ns, "k") and ns.k is not None:
        if ns.command in ("verify-theorem1", "verify-corollary2", "hunt-conjecture3",
                          "verify-observation4") and ns.k < 2:
            parser.error("--k must be at least 2")
        if ns.command == "hunt-periphery" and ns.k < 1:
            parser.error("--k must be at least 1")
        cfg.k = ns.k
    if hasattr(ns, "max_n"):
        if ns.max_n < 1:
            parser.error("--max-n must be at least 1")
        if cfg.input is None and ns.max_n > 10:
            parser.error("--max-n above 10 requires --input with an external graph6 stream")
        cfg.n_max = ns.max_n
    for key in ("graph6", "props", "family", "s", "t", "n", "p", "seed", "emit",
                "connected", "min_degree", "mode", "diameter", "periphery_size"):
        if hasattr(ns, key):
            cfg.extra[key] = getattr(ns, key)
    if ns.command == "hunt-periphery" and cfg.k > cfg.extra["periphery_size"]:
        parser.error("--k cannot exceed --periphery-size")
    if ns.command == "construct":
        _validate_construct(parser, cfg)
    if ns.command == "check" and not cfg.extra.get("graph6") and not cfg.input:
        parser.error("check needs --graph6 or --input")
    return cfg


def _validate_construct(parser: argparse.ArgumentParser, cfg: RunConfig) -> None:
    fam = cfg.extra["family"]
    need = {"kss-pm": ["s"], "complete": ["n"], "cycle": ["n"], "path": ["n"],
            "complete-bipartite": ["s", "t"], "random": ["n"]}
    for arg in need[fam]:
        if cfg.extra.get(arg) is None:
            parser.error(f"construct {fam} requires --{arg}")


def _graph_stream(cfg: RunConfig):
    if cfg.input == "-":
        return read_graph6_stream(sys.stdin, on_error=cfg.on_decode_error)
    with open(cfg.input, "r", encoding="ascii") as fh:
        lines = fh.readlines()
    return read_graph6_stream(lines, on_error=cfg.on_decode_error)


def _emit_report(cfg: RunConfig, report: SweepReport) -> None:
    if cfg.output_format == "json-lines":
        for cert in report.certificates:
            print(cert.to_json())
        print(report.to_json())
        return
    print(f"checker: {report.checker} (k={report.k})")
    print(f"orders: {report.n_range[0]}..{report.n_range[1]}")
    print(f"graphs examined: {report.graphs_examined}")
    print(f"satisfiers: {len(report.satisfiers)}")
    for line in report.satisfiers:
        print(f"  {line}")
    print(f"violations: {len(report.violations)}")
    for line in report.violations:
        print(f"  {line}")
    print(f"elapsed: {report.elapsed:.2f}s  workers: {report.worker_count}",
          file=sys.stderr)


def _expected_theorem1(k: int, n_max: int) -> set[bytes]:
    """Satisfier set the literature predicts within the swept range.

    For k >= 3 the characterization has the unique solution of order
    2k+2; for k = 2 every cycle of order >= 6 qualifies.
    """
    expected: set[bytes] = set()
    if k >= 3:
        if 2 * k + 2 <= n_max:
            expected.add(canonical_form(constructions.kss_minus_pm(k + 1)).data)
    else:
        for n in range(2 * k + 2, n_max + 1):
            expected.add(canonical_form(constructions.cycle(n)).data)
    return expected


def _expected_cycles(n_max: int) -> set[bytes]:
    return {canonical_form(constructions.cycle(n)).data for n in range(4, n_max + 1)}


def execute(cfg: RunConfig) -> int:
    """Dispatch a validated config; returns the process exit code."""
    try:
        return _execute(cfg)
    except (GraphError, Graph6Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def _execute(cfg: RunConfig) -> int:
    cmd = cfg.command
    if cmd == "check":
        return _cmd_check(cfg)
    if cmd == "construct":
        return _cmd_construct(cfg)
    if cmd == "gen":
        return _cmd_gen(cfg)

    graphs = _graph_stream(cfg) if cfg.input else None
    if cmd == "verify-theorem1":
        report = theorem1_sweep(cfg.k, cfg.n_max, cfg.workers, graphs=graphs)
        _emit_report(cfg, report)
        if graphs is not None:
            return 0
        expected = _expected_theorem1(cfg.k, cfg.n_max)
        got = {s.encode("ascii") for s in report.satisfiers}
        return 0 if got == expected else 1
    if cmd == "verify-cycles":
        gf = GenFilter(connected_only=True)
        report = sweep(f"cycles-{cfg.extra['mode']}", 2, cfg.n_max,
                       gen_filter=gf, workers=cfg.workers, graphs=graphs)
        _emit_report(cfg, report)
        if graphs is not None:
            return 0
        got = {s.encode("ascii") for s in report.satisfiers}
        return 0 if got == _expected_cycles(cfg.n_max) else 1
    if cmd == "verify-corollary2":
        gf = GenFilter(connected_only=True, min_degree=cfg.k)
        report = sweep("corollary2", cfg.k, cfg.n_max,
                       gen_filter=gf, workers=cfg.workers, graphs=graphs)
        _emit_report(cfg, report)
        return 0 if not report.violations else 1
    if cmd == "verify-observation4":
        report = verify_observation4(cfg.n_max, cfg.workers, graphs=graphs)
        _emit_report(cfg, report)
        return 0 if not report.violations else 1
    if cmd == "hunt-conjecture3":
        gf = GenFilter(connected_only=True, min_degree=cfg.k)
        report = sweep("conjecture3", cfg.k, cfg.n_max,
                       gen_filter=gf, workers=cfg.workers, graphs=graphs)
        _emit_report(cfg, report)
        return 0 if not report.violations else 1
    if cmd == "hunt-periphery":
        report = hunt_special_periphery(cfg.extra["diameter"], cfg.extra["periphery_size"],
                                        cfg.k, cfg.n_max, cfg.workers, graphs=graphs)
        _emit_report(cfg, report)
        return 0
    raise GraphError(f"unknown command {cmd!r}")  # pragma: no cover


def _graph_props(g: Graph) -> dict[str, Any]:
    props: dict[str, Any] = {
        "graph6": graph6_encode(g),
        "n": g.n,
        "edges": g.edge_count(),
        "degree_sequence": list(g.degree_sequence()),
        "connected": is_connected(g),
        "independence_number": independence_number(g),
        "matching_number": matching_number(g),
    }
    if g.n >= 1:
        props["vertex_connectivity"] = vertex_connectivity(g) if g.n >= 1 else 0
        props["edge_connectivity"] = edge_connectivity(g)
    if props["connected"] and g.n >= 1:
        profile = distance_profile(g)
        props["diameter"] = profile.diameter
        props["periphery"] = [v for v in range(g.n) if (profile.periphery >> v) & 1]
    return props


def _print_props(cfg: RunConfig, props: dict[str, Any]) -> None:
    if cfg.output_format == "json-lines":
        import json
        print(json.dumps(props, sort_keys=True))
    else:
        for key in ("graph6", "n", "edges", "degree_sequence", "connected",
                    "vertex_connectivity", "edge_connectivity",
                    "independence_number", "matching_number", "diameter", "periphery"):
            if key in props:
                print(f"{key}: {props[key]}")


def _cmd_check(cfg: RunConfig) -> int:
    if cfg.extra.get("graph6"):
        graphs = [graph6_decode(cfg.extra["graph6"])]
    else:
        graphs = list(_graph_stream(cfg))
    for g in graphs:
        _print_props(cfg, _graph_props(g))
    return 0


def _cmd_construct(cfg: RunConfig) -> int:
    fam = cfg.extra["family"]
    if fam == "kss-pm":
        g = constructions.kss_minus_pm(cfg.extra["s"])
    elif fam == "complete-bipartite":
        g = constructions.complete_bipartite(cfg.extra["s"], cfg.extra["t"])
    elif fam == "random":
        g = constructions.random_connected(cfg.extra["n"], cfg.extra["p"], cfg.extra["seed"])
    else:
        g = constructions.standard(fam.replace("-", "_"), cfg.extra["n"])
    if cfg.extra["emit"] == "graph6":
        print(graph6_encode(g))
    else:
        for u, v in g.edges():
            print(f"{u} {v}")
    return 0


def _cmd_gen(cfg: RunConfig) -> int:
    gf = GenFilter(connected_only=cfg.extra["connected"],
                   min_degree=cfg.extra["min_degree"])
    for form in generation_forms(cfg.extra["n"], gf, cfg.workers):
        print(form.decode("ascii"))
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    cfg = parse_args(sys.argv[1:] if argv is None else argv)
    return execute(cfg)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
