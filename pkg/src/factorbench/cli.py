"""Command-line front end.

Subcommands: toughness | factor | avoid | extremal | campaign.
Graphs arrive as graph6 lines on stdin or from a file; machine-readable
output is JSON (certificates, verdicts, reports) plus CSV summaries.

Exit codes: 0 = positive verdict / verified, 1 = negative verdict or
counterexample, 2 = usage, parse, or config error, 3 = cap or search
budget exceeded.  FACTORBENCH_CAP_N and FACTORBENCH_CAP_DELETIONS set the
default enumeration caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .avoidance import (
    DEFAULT_CAP_DELETIONS,
    DEFAULT_CAP_N,
    check_edge_avoiding,
    check_edge_deletion_star,
    check_matching_deletion,
    check_vertex_deletion_all,
)
from .campaign import CampaignConfig, run_campaign
from .errors import CapExceeded, GraphFormatError, SearchBudgetExceeded
from .factors import DEFAULT_SEARCH_BUDGET, check_ab_factor, find_ab_factor, find_star_factor
from .graphs import build_extremal_H, emit_graph6, parse_graph6
from .toughness import isolated_toughness, threshold

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_RESOURCE = 3


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"environment variable {name} must be an integer, got {value!r}")


def _read_lines(path: str | None):
    if path in (None, "-"):
        return sys.stdin.read().splitlines()
    with open(path, encoding="ascii") as fh:
        return fh.read().splitlines()


def _first_graph(path: str | None):
    for raw in _read_lines(path):
        if raw.strip():
            return parse_graph6(raw)
    raise GraphFormatError("no graph6 line found in input", offset=0)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# -- subcommands ----------------------------------------------------------------


def cmd_toughness(args) -> int:
    status = EXIT_OK
    for lineno, raw in enumerate(_read_lines(args.input), start=1):
        if not raw.strip():
            continue
        try:
            g = parse_graph6(raw)
            rep = isolated_toughness(g)
        except (GraphFormatError, ValueError) as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = EXIT_ERROR
            continue
        witness = ",".join(str(v) for v in rep.witness)
        value = rep.value
        print(f"{value.numerator}/{value.denominator} witness={{{witness}}}")
    return status


def cmd_factor(args) -> int:
    g = _first_graph(args.input)
    if args.find:
        cert = find_ab_factor(g, args.a, args.b, budget=args.budget, cert_cap=args.cap_n)
    else:
        if args.a < args.b:
            cert = check_ab_factor(g, args.a, args.b, cap_n=args.cap_n)
        else:
            cert = find_ab_factor(g, args.a, args.b, budget=args.budget, cert_cap=args.cap_n)
    payload = cert.to_json_dict()
    if args.find and cert.exists and args.a == 1:
        forest = find_star_factor(g, args.b, budget=args.budget)
        if forest is not None:
            payload["stars"] = forest.to_json_dict()
    _print_json(payload)
    return EXIT_OK if cert.exists else EXIT_NEGATIVE


def cmd_avoid(args) -> int:
    g = _first_graph(args.input)
    if args.mode == "vertices":
        _need(args, "a", "b", "n")
        verdict = check_vertex_deletion_all(
            g, args.a, args.b, args.n,
            cap_n=args.cap_n, cap_deletions=args.cap_deletions, budget=args.budget,
        )
    elif args.mode == "edges":
        _need(args, "m", "n")
        verdict = check_edge_deletion_star(
            g, args.m, args.n,
            cap_n=args.cap_n, cap_deletions=args.cap_deletions, budget=args.budget,
        )
    elif args.mode == "matching":
        _need(args, "a", "b", "n")
        verdict = check_matching_deletion(
            g, args.a, args.b, args.n,
            cap_n=args.cap_n, cap_deletions=args.cap_deletions, budget=args.budget,
        )
    elif args.mode == "edge":
        _need(args, "a", "b", "edge")
        u, _, v = args.edge.partition(",")
        verdict = check_edge_avoiding(
            g, (int(u), int(v)), args.a, args.b,
            cap_n=args.cap_n, budget=args.budget,
        )
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(f"unknown mode {args.mode}")
    _print_json(verdict.to_json_dict())
    return EXIT_OK if verdict.conclusion_holds else EXIT_NEGATIVE


def _need(args, *names) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise SystemExit(f"avoid --mode {args.mode} requires --{name}")


def cmd_extremal(args) -> int:
    w = build_extremal_H(args.m, args.a, args.b, args.n)
    thr = threshold("A", a=args.a, b=args.b, n=args.n)
    verdict = check_vertex_deletion_all(
        w.graph, args.a, args.b, args.n,
        deletions=[w.default_v0()],
        witnesses=[w.clique_small],
        cap_n=args.cap_n,
        budget=args.budget,
    )
    cert = verdict.counterexample.certificate.violation
    payload = {
        "params": {"m": args.m, "a": args.a, "b": args.b, "n": args.n},
        "graph6": emit_graph6(w.graph),
        "parts": {
            "cliqueSmall": list(w.clique_small),
            "isolatedRow": list(w.isolated_row),
            "cliqueLarge": list(w.clique_large),
        },
        "witnessRatio": str(w.witness_ratio),
        "threshold": str(thr),
        "strictlyBelow": w.witness_ratio < thr,
        "v0": list(w.default_v0()),
        "violation": verdict.counterexample.certificate.to_json_dict(),
        "identity": {
            "aT_minus_d": args.b * len(cert.s) - cert.delta,
            "bS": args.b * len(cert.s),
        },
    }
    _print_json(payload)
    return EXIT_OK


def cmd_campaign(args) -> int:
    config = CampaignConfig.from_file(args.config)
    if args.seed is not None:
        config = CampaignConfig(**{
            **{f: getattr(config, f) for f in config.__dataclass_fields__},
            "seed_list": (args.seed,),
        })
    if args.output_json:
        config = CampaignConfig(**{
            **{f: getattr(config, f) for f in config.__dataclass_fields__},
            "output_json": args.output_json,
        })
    report = run_campaign(config, workers=args.workers)
    agg = report.aggregates
    print(
        f"instances={agg['total']} verified={agg['verified']} "
        f"vacuous={agg['vacuous']} counterexamples={agg['counterexample']} "
        f"capped={agg['capped']}"
    )
    return EXIT_NEGATIVE if report.counterexamples else EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    cap_n_default = _env_int("FACTORBENCH_CAP_N", DEFAULT_CAP_N)
    cap_del_default = _env_int("FACTORBENCH_CAP_DELETIONS", DEFAULT_CAP_DELETIONS)

    parser = argparse.ArgumentParser(
        prog="factorbench",
        description="Exact graph-factor workbench: toughness, factor criteria, "
        "deletion-avoiding checks, and verification campaigns.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p):
        p.add_argument("--cap-n", type=int, default=cap_n_default,
                       help="max vertices for subset enumeration")
        p.add_argument("--cap-deletions", type=int, default=cap_del_default,
                       help="max enumerated deletions per instance")
        p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET,
                       help="node budget for the constructive search")

    p = sub.add_parser("toughness", help="exact isolated toughness, one graph6 line each")
    p.add_argument("input", nargs="?", default="-", help="graph6 file or - for stdin")
    p.set_defaults(func=cmd_toughness)

    p = sub.add_parser("factor", help="[a,b]-factor existence / construction")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--find", action="store_true", help="construct an explicit factor")
    add_caps(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("avoid", help="deletion-avoiding factor checks")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--mode", choices=["vertices", "edges", "matching", "edge"], required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=int, help="star size bound (edges mode)")
    p.add_argument("--n", type=int, help="number of deleted objects")
    p.add_argument("--edge", help="single edge as 'u,v' (edge mode)")
    add_caps(p)
    p.set_defaults(func=cmd_avoid)

    p = sub.add_parser("extremal", help="sharpness construction demo")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_caps(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("campaign", help="run a verification campaign from a config file")
    p.add_argument("config")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, help="override the config seed list with one seed")
    p.add_argument("--output-json", help="override the config report path")
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
