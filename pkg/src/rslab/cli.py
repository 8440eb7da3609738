"""Command-line front end.

Subcommands: `construct` (emit a named construction), `verify` (run a
saturation check on a graph file), `oracle` (brute-force census), and
`reproduce` (pass/fail table for a claim suite).

Exit codes: 0 success / property holds / Established, 1 property fails /
Refuted, 2 bad parameters or unparseable input, 3 Unknown or an inexact
census.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import reproduce as repro
from .colouring import EdgeColouring
from .constructions import (
    GadgetBundle,
    broom_gadget,
    broom_saturated,
    caterpillar_bundle,
    double_star_construction,
    folded_cube,
    star_forest,
)
from .engine import (
    DEFAULT_BUDGET,
    Status,
    is_properly_rainbow_saturated,
    is_saturated,
    is_semi_saturated,
)
from .errors import RslabError
from .graphs import Graph, from_graph6
from .oracle import (
    DEFAULT_CENSUS_BUDGET,
    prsat_number,
    sat_number,
    ssat_number,
)
from .patterns import parse_pattern

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_BAD_INPUT = 2
EXIT_UNKNOWN = 3


@dataclass
class RunConfig:
    """Resolved options shared by the subcommands."""

    budget: int = DEFAULT_BUDGET
    threads: int = 1
    cache_dir: str | None = None
    output_format: str = "text"
    force: bool = False
    allow_unknown: bool = False

    def __post_init__(self):
        if self.budget <= 0:
            raise RslabError("budget must be positive")
        if self.threads < 1:
            raise RslabError("thread count must be >= 1")


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read().strip()
    else:
        text = Path(path).read_text(encoding="utf-8").strip()
    if not text:
        raise RslabError("empty graph input")
    if text.startswith("{"):
        return Graph.from_json_dict(json.loads(text))
    return from_graph6(text.splitlines()[0])


def _emit(obj, fmt: str) -> str:
    if fmt == "json":
        if hasattr(obj, "to_json_dict"):
            return json.dumps(obj.to_json_dict(), sort_keys=True)
        return json.dumps(obj, sort_keys=True)
    if fmt == "graph6":
        g = obj.graph if isinstance(obj, (GadgetBundle, EdgeColouring)) else obj
        return g.to_graph6()
    if fmt == "dot":
        if isinstance(obj, GadgetBundle) and obj.colouring is not None:
            return obj.colouring.to_dot()
        if isinstance(obj, EdgeColouring):
            return obj.to_dot()
        g = obj.graph if isinstance(obj, GadgetBundle) else obj
        return g.to_dot()
    # text
    if isinstance(obj, GadgetBundle):
        g = obj.graph
        head = f"{obj.provenance}: {g.n} vertices, {len(g.edges)} edges"
        if obj.colouring is not None:
            head += f", {obj.colouring.colour_count} colours"
        return head + "\n" + g.to_graph6()
    if isinstance(obj, Graph):
        return f"{obj.n} vertices, {len(obj.edges)} edges\n{obj.to_graph6()}"
    return str(obj)


def cmd_construct(args, config: RunConfig) -> int:
    family = args.family
    if family == "folded-cube":
        obj: object = folded_cube(args.ell)
    elif family == "broom-gadget":
        obj = broom_gadget(args.m)
    elif family == "broom-saturated":
        obj = broom_saturated(args.n, args.m, cache_dir=config.cache_dir)
    elif family == "caterpillar":
        obj = caterpillar_bundle(args.n, args.k, args.ell)
    elif family == "star-forest":
        obj = star_forest(args.n, args.k)
    elif family == "double-star":
        obj = double_star_construction(args.n, args.t, args.s, args.variant)
    else:
        raise RslabError(f"unknown family {family!r}")
    print(_emit(obj, config.output_format))
    return EXIT_OK


def cmd_verify(args, config: RunConfig) -> int:
    g = _read_graph(args.graph)
    spec = parse_pattern(args.pattern)
    if args.mode == "sat":
        res = is_saturated(g, spec)
        payload = res.to_json_dict()
        code = EXIT_OK if res.holds else EXIT_FALSE
    elif args.mode == "ssat":
        res = is_semi_saturated(g, spec)
        payload = res.to_json_dict()
        code = EXIT_OK if res.holds else EXIT_FALSE
    else:
        verdict = is_properly_rainbow_saturated(g, spec, config.budget)
        payload = verdict.to_json_dict()
        code = {
            Status.ESTABLISHED: EXIT_OK,
            Status.REFUTED: EXIT_FALSE,
            Status.UNKNOWN: EXIT_UNKNOWN,
        }[verdict.status]
    if config.output_format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))
    return code


def cmd_oracle(args, config: RunConfig) -> int:
    spec = parse_pattern(args.pattern)
    if args.quantity == "sat":
        rec = sat_number(args.n, spec, edge_cap=args.edge_cap,
                         cache_dir=config.cache_dir, force=config.force)
    elif args.quantity == "ssat":
        rec = ssat_number(args.n, spec, edge_cap=args.edge_cap,
                          cache_dir=config.cache_dir, force=config.force)
    else:
        rec = prsat_number(
            args.n, spec,
            budget=args.budget if args.budget else DEFAULT_CENSUS_BUDGET,
            edge_cap=args.edge_cap, workers=config.threads,
            cache_dir=config.cache_dir, force=config.force,
        )
    if config.output_format == "json":
        print(json.dumps(rec.to_json_dict(), sort_keys=True))
    else:
        print(f"{rec.quantity}({rec.n},{rec.pattern}) = {rec.value}")
        print(f"witnesses: {len(rec.witnesses)}  examined: {rec.total_graphs_examined}"
              f"  exact: {rec.exact}")
        for w in rec.witnesses:
            print(f"  {w}")
    if not rec.exact:
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_reproduce(args, config: RunConfig) -> int:
    rc = repro.ReproConfig(
        budget=args.budget if args.budget else DEFAULT_CENSUS_BUDGET,
        cache_dir=config.cache_dir,
        workers=config.threads,
        ell=args.ell,
    )
    rows = repro.run_suite(args.suite, rc)
    if config.output_format == "json":
        print(json.dumps([r.to_json_dict() for r in rows], sort_keys=True))
    else:
        print(repro.format_rows(rows))
    return EXIT_OK if repro.all_pass(rows, config.allow_unknown) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rslab",
        description="Exhaustive-search lab for proper rainbow saturation of small graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", default="text",
                        choices=["text", "json", "graph6", "dot"])
    common.add_argument("--cache-dir", default=None,
                        help="census cache directory (or set RSLAB_CACHE)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--force", action="store_true",
                        help="overwrite mismatched cached census records")
    common.add_argument("--allow-unknown", action="store_true",
                        help="treat Unknown reproduce rows as non-fatal")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named construction", parents=[common])
    c.add_argument("family", choices=[
        "folded-cube", "broom-gadget", "broom-saturated",
        "caterpillar", "star-forest", "double-star",
    ])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--ell", type=int)
    c.add_argument("--variant", choices=["sat", "prsat"], default="sat")
    c.set_defaults(fn=cmd_construct)

    v = sub.add_parser("verify", help="check a graph file against a pattern",
                       parents=[common])
    v.add_argument("graph", help="graph6 or JSON graph file, or - for stdin")
    v.add_argument("--pattern", required=True,
                   help="P5, K1,4, B4,2, T5star, S3,2, cat:ell=4;leaves=1,0,0,1, g6:..., @file")
    v.add_argument("--mode", choices=["sat", "ssat", "prsat"], default="prsat")
    v.add_argument("--budget", type=int, default=None)
    v.set_defaults(fn=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force census of a saturation number",
                       parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--pattern", required=True)
    o.add_argument("--quantity", choices=["sat", "ssat", "prsat"], required=True)
    o.add_argument("--budget", type=int, default=None)
    o.add_argument("--edge-cap", type=int, default=None)
    o.set_defaults(fn=cmd_oracle)

    r = sub.add_parser("reproduce", help="pass/fail table for a claim suite",
                       parents=[common])
    r.add_argument("suite", choices=list(repro.SUITES))
    r.add_argument("--ell", type=int, default=4)
    r.add_argument("--budget", type=int, default=None)
    r.set_defaults(fn=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        config = RunConfig(
            budget=args.budget if getattr(args, "budget", None) else DEFAULT_BUDGET,
            threads=args.threads,
            cache_dir=args.cache_dir,
            output_format=args.output_format,
            force=args.force,
            allow_unknown=args.allow_unknown,
        )
        return args.fn(args, config)
    except RslabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
