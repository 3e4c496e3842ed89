"""Command line interface: ``mtframsey {gen-mtf,ramsey,bounds,verify}``.

Graphs cross process boundaries as graph6, one per line.  Tables are TSV
with a leading ``#`` comment saying what they contain.

Exit codes: 0 success, 1 a verified graph failed, 2 usage or missing
axioms, 3 a search stopped at its order limit without an exact answer.
"""

from __future__ import annotations

import argparse
import collections
import contextlib
import logging
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterator, Optional, Sequence, TextIO

from . import graph6
from .driver import (
    DEFAULT_R_MAX,
    all_ramsey_graphs,
    candidate_graphs,
    classify_with_witnesses,
    expand_to_all_ramsey_graphs_general,
    ramsey_number,
    verify_ramsey_graph,
)
from .family import parse_family
from .graph import complement, contains_subgraph, is_triangle_free
from .parallel import default_workers, generate_mtf_parallel
from .ramseyprune import DEFAULT_CACHE_CAP, RamseyContext
from .theory import InsufficientAxioms, KnownValues, derive_bounds

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND_ONLY = 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace

    def validate(self) -> None:
        a = self.args
        if getattr(a, "workers", 1) < 1:
            raise UsageError("--workers must be at least 1")
        if getattr(a, "cache_cap", 0) < 0:
            raise UsageError("--cache-cap must be non-negative")
        if self.command == "gen-mtf" and not 1 <= a.n <= 64:
            raise UsageError("order must lie in 1..64")
        if self.command == "ramsey":
            modes = sum(bool(x) for x in (a.target and not a.all_graphs, a.all_graphs, a.classify))
            if modes != 1:
                raise UsageError("choose one of --target, --target with --all-graphs, --classify")
            if a.all_graphs and (a.target is None or a.order is None):
                raise UsageError("--all-graphs needs --target and --order")
            if a.classify and a.order is None and a.candidates is None:
                raise UsageError("--classify needs --order or --candidates")
            if a.connected and a.disconnected:
                raise UsageError("--connected and --disconnected are exclusive")


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _target(spec: str):
    try:
        return parse_family(spec).graph
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _read_graphs(path: str):
    if path == "-":
        return list(graph6.read_file(sys.stdin))
    with open(path) as fh:
        return list(graph6.read_file(fh))


# ---------------------------------------------------------------------------


def cmd_gen_mtf(args: argparse.Namespace) -> int:
    collect = not args.count_only and not args.table
    stats, lines = generate_mtf_parallel(args.n, args.workers, collect=collect)
    if args.count_only:
        t0, t1, t2 = stats.by_type(args.n)
        print(f"{args.n} {stats.total(args.n)} {t0} {t1} {t2}")
    if args.table:
        with _output(args.out if not collect else None) as out:
            out.write("# mtf graphs by order and expansion type of the canonical last step\n")
            out.write("n\ttotal\ttype0\ttype1\ttype2\n")
            for row in stats.tsv_rows():
                out.write(row + "\n")
            out.write(f"# generation time to order {args.n}: {stats.seconds:.3f} s\n")
    if collect:
        with _output(args.out) as out:
            for line in lines:
                out.write(line + "\n")
    return 0


def _ctx_kwargs(args: argparse.Namespace) -> dict:
    return {"cache_cap": args.cache_cap}


def cmd_ramsey(args: argparse.Namespace) -> int:
    if args.classify:
        return _ramsey_classify(args)
    g = _target(args.target)
    if args.all_graphs:
        return _ramsey_all_graphs(args, g)
    ctx = RamseyContext(g, **_ctx_kwargs(args))
    ctx.log_witnesses = args.log_witnesses
    res = ramsey_number(g, r_start=args.r_start, r_max=args.r_max, ctx=ctx)
    if res.exact:
        print(f"R(K3,{args.target}) = {res.value}")
    else:
        print(f"R(K3,{args.target}) >= {res.value} (stopped at order {args.r_max})")
    if args.witness_out and res.witness is not None:
        with open(args.witness_out, "w") as fh:
            graph6.write_lines([res.witness], fh)
    return 0 if res.exact else EXIT_BOUND_ONLY


def _ramsey_all_graphs(args: argparse.Namespace, g) -> int:
    seeds = _read_graphs(args.seed_graphs) if args.seed_graphs else None
    ctx = RamseyContext(g, **_ctx_kwargs(args))
    ctx.log_witnesses = args.log_witnesses
    graphs = all_ramsey_graphs(g, args.order, seed_graphs=seeds, ctx=ctx)
    label = "mtf"
    if args.general:
        graphs = expand_to_all_ramsey_graphs_general(graphs, g)
        label = "triangle-free"
    with _output(args.out) as out:
        graph6.write_lines(graphs, out)
    print(f"# {len(graphs)} {label} Ramsey graphs for {args.target} on {args.order} vertices", file=sys.stderr)
    return 0


def _ramsey_classify(args: argparse.Namespace) -> int:
    if args.candidates:
        cands = _read_graphs(args.candidates)
        what = f"graphs from {args.candidates}"
    else:
        conn = True if args.connected else (False if args.disconnected else None)
        cands = candidate_graphs(args.order, conn)
        kind = {True: "connected ", False: "disconnected ", None: ""}[conn]
        what = f"{kind}graphs of order {args.order}"
    results = classify_with_witnesses(
        cands, r_start=args.r_start, r_max=args.r_max, checkpoint_dir=args.checkpoint_dir, **_ctx_kwargs(args)
    )
    wdir = Path(args.witness_dir) if args.witness_dir else None
    if wdir is not None:
        wdir.mkdir(parents=True, exist_ok=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(f"# R(K3,G) verdicts for {what}\n")
            fh.write("graph6\tverdict\twitness_file\n")
            for i, c in enumerate(results):
                verdict = f"={c.value}" if c.value is not None else f">{args.r_max}"
                wfile = "-"
                if wdir is not None and c.witness is not None:
                    path = wdir / f"witness_{i:05d}.g6"
                    path.write_text(graph6.encode(c.witness) + "\n")
                    wfile = str(path)
                fh.write(f"{graph6.encode(c.graph)}\t{verdict}\t{wfile}\n")
    hist = collections.Counter(c.value for c in results if c.value is not None)
    print(f"# number of {what} by R(K3,G)")
    print("r\tcount")
    for r in sorted(hist):
        print(f"{r}\t{hist[r]}")
    open_count = sum(c.value is None for c in results)
    if open_count:
        print(f">{args.r_max}\t{open_count}")
        return EXIT_BOUND_ONLY
    return 0


def _known_values(args: argparse.Namespace) -> KnownValues:
    if args.known:
        kv = KnownValues.from_tsv(args.known)
    elif args.no_default_known:
        kv = KnownValues()
    else:
        ref = resources.files("mtframsey") / "data" / "known_values.tsv"
        with resources.as_file(ref) as path:
            kv = KnownValues.from_tsv(path)
    for item in args.value or []:
        name, _, val = item.partition("=")
        if not val:
            raise UsageError(f"--value expects NAME=R, got {item!r}")
        kv.add(name, int(val))
    return kv


def cmd_bounds(args: argparse.Namespace) -> int:
    kv = _known_values(args)
    try:
        d = derive_bounds(args.graph, kv)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"# derivation for R(K3,{args.graph})")
    print("condition\tinstance\tverdict")
    for line in d.log:
        print(line)
    for flag in d.flags:
        print(f"flag\t{flag}\t-")
    print(d.summary())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = _target(args.target)
    graphs = _read_graphs(args.file)
    bad = 0
    hist: collections.Counter[int] = collections.Counter()
    with _output(args.out) as out:
        out.write(f"# Ramsey graph check against {args.target}\n")
        for f in graphs:
            if not is_triangle_free(f):
                status = "FAIL\ttriangle"
            elif contains_subgraph(complement(f), g):
                status = "FAIL\ttarget in complement"
            else:
                status = "ok\t-"
            assert (status.startswith("ok")) == verify_ramsey_graph(f, g)
            if not status.startswith("ok"):
                bad += 1
            hist[f.num_edges()] += 1
            out.write(f"{graph6.encode(f)}\t{status}\n")
        out.write("# graphs by number of edges\n")
        out.write("edges\tcount\n")
        for e in sorted(hist):
            out.write(f"{e}\t{hist[e]}\n")
    if bad:
        print(f"{bad} of {len(graphs)} graphs failed", file=sys.stderr)
        return EXIT_FAILED
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtframsey", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-mtf", help="generate mtf graphs of one order")
    g.add_argument("n", type=int)
    g.add_argument("--count-only", action="store_true", help='print "n total type0 type1 type2"')
    g.add_argument("--table", action="store_true", help="TSV of counts for every order up to n")
    g.add_argument("--out", help="output file (default stdout)")
    g.add_argument("--workers", type=int, default=default_workers())
    g.set_defaults(func=cmd_gen_mtf)

    r = sub.add_parser("ramsey", help="triangle Ramsey numbers and Ramsey graphs")
    r.add_argument("--target", help="family spec or graph6")
    r.add_argument("--all-graphs", action="store_true", help="list all mtf Ramsey graphs at --order")
    r.add_argument("--general", action="store_true", help="with --all-graphs: also non-maximal ones")
    r.add_argument("--classify", action="store_true", help="R(K3,G) for every candidate graph")
    r.add_argument("--order", type=int)
    r.add_argument("--connected", action="store_true")
    r.add_argument("--disconnected", action="store_true")
    r.add_argument("--candidates", help="graph6 file of candidates for --classify")
    r.add_argument("--r-start", type=int)
    r.add_argument("--r-max", type=int, default=DEFAULT_R_MAX)
    r.add_argument("--cache-cap", type=int, default=DEFAULT_CACHE_CAP)
    r.add_argument("--checkpoint-dir")
    r.add_argument("--seed-graphs", help="all mtf Ramsey graphs at a smaller order (graph6)")
    r.add_argument("--witness-dir", help="with --classify: write lower-bound witnesses here")
    r.add_argument("--witness-out", help="with --target: write the lower-bound witness here")
    r.add_argument("--log-witnesses", action="store_true", help="log rejected graphs with witness sets")
    r.add_argument("--out")
    r.add_argument("--workers", type=int, default=default_workers(), help="accepted for uniformity; searches run serially")
    r.set_defaults(func=cmd_ramsey)

    b = sub.add_parser("bounds", help="derived bounds from known Ramsey numbers")
    b.add_argument("--graph", required=True)
    b.add_argument("--known", help="TSV of name<TAB>R(K3,name)")
    b.add_argument("--value", action="append", help="extra known value NAME=R")
    b.add_argument("--no-default-known", action="store_true", help="start from no known values")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="check graphs are triangle Ramsey graphs for a target")
    v.add_argument("file")
    v.add_argument("--target", required=True)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        RunConfig(args.command, args).validate()
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except InsufficientAxioms as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
