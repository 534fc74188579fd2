"""Command-line interface; every subcommand prints one JSON document (bench: one per line)."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .coloring import (
    Status,
    bipartite_edge_color,
    edge_color_best,
    edge_color_target,
    vizing_edge_color,
)
from .density import degeneracy_order, is_ab_graph, maximum_average_degree
from .graph import InputError
from .instances import FAMILIES, emit_coloring, emit_instance, generate, parse_coloring, parse_instance
from .oracle import exact_strong_index, verify_proper_edge, verify_strong
from .strong import METHODS, PaletteExhausted, strong_color

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_EXHAUSTED = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep usage errors apart from the data exit codes
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Exit(Exception):
    def __init__(self, code: int, report: dict):
        self.code = code
        self.report = report


def _frac(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else str(x)


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args):
    return parse_instance(_read(args.instance), args.format)


def _cmd_mad(args) -> dict:
    g, _ = _load(args)
    rep = maximum_average_degree(g)
    return {"command": "mad", "mad": str(rep.mad), "witness": sorted(rep.witness)}


def _cmd_degeneracy(args) -> dict:
    g, _ = _load(args)
    rep = degeneracy_order(g)
    return {"command": "degeneracy", "degeneracy": rep.degeneracy, "ordering": list(rep.ordering)}


def _cmd_sparsity(args) -> dict:
    g, _ = _load(args)
    v = is_ab_graph(g, Fraction(args.a), Fraction(args.b), args.min_vertices)
    return {
        "command": "sparsity",
        "a": str(v.a),
        "b": str(v.b),
        "min_vertices": v.min_vertices,
        "holds": v.holds,
        "violator": None if v.violator is None else sorted(v.violator),
    }


def _cmd_edge_color(args) -> dict:
    g, _ = _load(args)
    report = {"command": "edge-color", "method": args.method, "seed": args.seed,
              "parameters": {"node_limit": args.node_limit, "target": args.target}}
    if args.method == "vizing":
        ec = vizing_edge_color(g)
    elif args.method == "konig":
        ec = bipartite_edge_color(g)
    elif args.method == "best":
        ec = edge_color_best(g, args.node_limit, args.seed)
    else:
        k = g.max_degree() if args.target is None else args.target
        res = edge_color_target(g, k, args.node_limit, args.seed)
        report["status"] = res.status.value
        if res.status is Status.EXHAUSTED:
            raise _Exit(EXIT_EXHAUSTED, report)
        if not res.found:
            return report
        ec = res.coloring
    report.update(
        status="found",
        color_count=ec.color_count,
        colors=list(ec.colors),
        valid=not verify_proper_edge(g, ec),
    )
    if not report["valid"]:
        raise _Exit(EXIT_VERIFY, report)
    return report


def _cmd_strong_color(args) -> dict:
    g, drawing = _load(args)
    params = {"node_limit": args.node_limit, "palette": args.palette}
    report = {"command": "strong-color", "method": args.method, "seed": args.seed, "parameters": params}
    start = time.perf_counter()
    res = strong_color(g, args.method, drawing, args.node_limit, args.seed, args.palette)
    elapsed = time.perf_counter() - start
    if res is None:
        report["status"] = "exhausted"
        raise _Exit(EXIT_EXHAUSTED, report)
    valid = not verify_strong(g, res)
    report.update(
        method=res.method,
        color_count=res.color_count,
        certified_bound=_frac(res.certified_bound),
        bound_formula=res.bound_formula,
        valid=valid,
        class_sizes=res.class_sizes(),
        details=res.details,
        colors=list(res.colors),
    )
    if args.timings:
        report["timings"] = {"strong_color_seconds": round(elapsed, 6)}
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(emit_coloring(res.colors))
    if not valid:
        raise _Exit(EXIT_VERIFY, report)
    return report


def _cmd_oracle(args) -> dict:
    g, _ = _load(args)
    k = exact_strong_index(g, args.node_limit)
    report = {"command": "oracle", "strong_index": k, "parameters": {"node_limit": args.node_limit}}
    if k is None:
        report["status"] = "exhausted"
        raise _Exit(EXIT_EXHAUSTED, report)
    return report


def _cmd_verify(args) -> dict:
    g, _ = _load(args)
    colors = parse_coloring(_read(args.coloring), g.edge_count)
    violations = verify_strong(g, colors)
    used = {c for c in colors if c is not None}
    report = {
        "command": "verify",
        "valid": not violations,
        "color_count": len(used),
        "violations": [{"kind": v.kind, "ids": list(v.ids)} for v in violations],
    }
    if violations:
        raise _Exit(EXIT_VERIFY, report)
    return report


def _parse_params(items: Sequence[str]) -> dict:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"parameter {item!r} is not key=value")
        params[key.replace("-", "_")] = value
    return params


def _cmd_gen(args) -> Optional[dict]:
    g, drawing = generate(args.family, _parse_params(args.param), args.seed)
    text = emit_instance(g, drawing, args.format if args.format != "auto" else "text")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        return {"command": "gen", "family": args.family, "seed": args.seed,
                "vertices": g.vertex_count, "edges": g.edge_count, "output": args.output}
    sys.stdout.write(text)
    return None


def bench_corpus(count: int, seed: int, max_n: int = 40):
    """Deterministic mixed corpus of (name, graph, drawing) for benchmarking."""
    import random

    rng = random.Random(seed)
    for i in range(count):
        s = rng.getrandbits(32)
        kind = i % 4
        if kind == 0:
            n = rng.randint(4, max_n)
            yield f"one-planar n={n}", *generate("one-planar", {"n": n, "max_degree": rng.randint(6, 12)}, s)
        elif kind == 1:
            n = rng.randint(4, max_n)
            yield f"ic-planar n={n}", *generate("ic-planar", {"n": n, "max_degree": rng.randint(6, 12)}, s)
        elif kind == 2:
            k = rng.randint(3, 6)
            yield f"quad-optimal pdw k={k}", *generate("quad-optimal", {"base": "pdw", "k": k}, s)
        else:
            n = rng.randint(2, max_n)
            yield f"random-simple n={n}", *generate("random-simple", {"n": n, "p": rng.uniform(0.05, 0.4)}, s)


def _cmd_bench(args) -> None:
    totals: dict[str, dict] = {}
    for name, g, drawing in bench_corpus(args.count, args.seed, args.max_n):
        row = {"instance": name, "vertices": g.vertex_count, "edges": g.edge_count,
               "max_degree": g.max_degree(), "results": {}}
        for method in args.methods:
            try:
                start = time.perf_counter()
                res = strong_color(g, method, drawing, args.node_limit, args.seed)
                elapsed = time.perf_counter() - start
            except InputError as exc:
                row["results"][method] = {"skipped": str(exc).split(":")[0]}
                continue
            if res is None:
                row["results"][method] = {"status": "exhausted"}
                continue
            valid = not verify_strong(g, res)
            entry = {"color_count": res.color_count, "certified_bound": _frac(res.certified_bound), "valid": valid}
            if args.timings:
                entry["seconds"] = round(elapsed, 6)
            row["results"][method] = entry
            t = totals.setdefault(method, {"runs": 0, "invalid": 0, "colors": 0})
            t["runs"] += 1
            t["invalid"] += not valid
            t["colors"] += res.color_count
        print(json.dumps(row, sort_keys=True))
    print(json.dumps({"summary": totals, "seed": args.seed, "count": args.count}, sort_keys=True))
    if any(t["invalid"] for t in totals.values()):
        raise _Exit(EXIT_VERIFY, {})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="strongcolor", description="Strong edge colorings via matching contraction.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_instance(p):
        p.add_argument("instance", help="instance file ('-' for stdin)")
        p.add_argument("--format", choices=("auto", "text", "json"), default="auto")
        return p

    def with_search(p):
        p.add_argument("--node-limit", type=int, default=200_000)
        p.add_argument("--seed", type=_seed, default=0)
        return p

    with_instance(sub.add_parser("mad", help="exact maximum average degree"))
    with_instance(sub.add_parser("degeneracy", help="degeneracy and peeling order"))

    p = with_instance(sub.add_parser("sparsity", help="check |E(H)| <= a|V(H)| - b on subgraphs"))
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--min-vertices", type=int, default=None)

    p = with_search(with_instance(sub.add_parser("edge-color", help="proper edge coloring")))
    p.add_argument("--method", choices=("vizing", "konig", "target", "best"), default="best")
    p.add_argument("--target", type=int, default=None, help="color budget for --method target (default: max degree)")

    p = with_search(with_instance(sub.add_parser("strong-color", help="strong edge coloring")))
    p.add_argument("--method", choices=METHODS, default="mad")
    p.add_argument("--palette", type=int, default=None, help="palette for the 1-planar peeling case")
    p.add_argument("--output", help="also write the coloring as 'edge color' lines")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")

    p = with_instance(sub.add_parser("oracle", help="exact strong chromatic index"))
    p.add_argument("--node-limit", type=int, default=2_000_000)

    p = with_instance(sub.add_parser("verify", help="check a coloring file"))
    p.add_argument("coloring")

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--format", choices=("auto", "text", "json"), default="text")
    p.add_argument("--output")

    p = with_search(sub.add_parser("bench", help="run pipelines over a generated corpus"))
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--methods", nargs="+", choices=METHODS, default=["mad", "oneplanar", "split", "ic", "optimal", "greedy"])
    p.add_argument("--timings", action="store_true")
    return parser


_COMMANDS = {
    "mad": _cmd_mad,
    "degeneracy": _cmd_degeneracy,
    "sparsity": _cmd_sparsity,
    "edge-color": _cmd_edge_color,
    "strong-color": _cmd_strong_color,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _COMMANDS[args.command](args)
        code = EXIT_OK
    except _Exit as exc:
        report, code = exc.report or None, exc.code
    except (InputError, PaletteExhausted, OSError) as exc:
        print(json.dumps({"command": args.command, "error": str(exc)}, sort_keys=True))
        return EXIT_INPUT
    if report is not None:
        print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
