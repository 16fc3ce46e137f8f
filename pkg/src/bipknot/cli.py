"""Command-line entry point.

Exit codes:
  0  success (``minor``: minor found; ``verify-theorem``: result reproduced)
  1  negative result (``minor``: no minor; ``verify-theorem``: mismatch)
  2  bad input (malformed graph6, unknown catalog name, bad arguments)
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path

from .enumerate import degree_combinations, gale_ryser
from .families import CATALOG_NAMES, catalog, cousins
from .graph import Graph6Error, GraphError, decode_graph6, encode_graph6
from .minors import has_minor
from .sieve import combination_graphs, run_theorem
from .simplify import TRACE_HEADER, hat

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2

log = logging.getLogger("bipknot")


@dataclass
class RunConfig:
    edge_budget: int = 23
    min_degree: int = 3
    jobs: int = 1
    cache_dir: Path | None = None
    out_dir: Path = Path("out")
    connected_only: bool = True

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        if self.edge_budget < 1:
            raise ValueError("--edges must be at least 1")


def _config(args) -> RunConfig:
    return RunConfig(
        edge_budget=args.edges,
        min_degree=args.min_degree,
        jobs=args.jobs,
        cache_dir=Path(args.cache_dir) if args.cache_dir else None,
        out_dir=Path(args.out),
        connected_only=not args.include_disconnected,
    )


def _fill_cache(args):
    dc, cache_dir = args
    graphs, fresh = combination_graphs(dc, cache_dir, connected_only=False)
    return dc.name, len(graphs), fresh


def _cache_dir(cfg: RunConfig) -> Path:
    return cfg.cache_dir or cfg.out_dir / "cache"


def cmd_enumerate(cfg: RunConfig) -> int:
    cache_dir = _cache_dir(cfg)
    combos = [dc for dc in degree_combinations(cfg.edge_budget, cfg.min_degree)
              if gale_ryser(dc.deg_a, dc.deg_b)]
    tasks = [(dc, cache_dir) for dc in combos]
    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            rows = pool.map(_fill_cache, tasks, chunksize=1)
    else:
        rows = [_fill_cache(t) for t in tasks]
    total = 0
    for name, count, fresh in rows:
        total += count
        print(f"{name}\t{count}\t{'generated' if fresh else 'cached'}")
    print(f"total {total} classes in {len(rows)} combinations under {cache_dir}")
    return EXIT_OK


def _run(cfg: RunConfig):
    report = run_theorem(cfg.edge_budget, cfg.jobs, _cache_dir(cfg),
                         cfg.min_degree, cfg.connected_only)
    tsv, summary = report.write(cfg.out_dir)
    print(report.summary(), end="")
    print(f"wrote {tsv} and {summary}")
    return report


def cmd_sieve(cfg: RunConfig) -> int:
    report = _run(cfg)
    return EXIT_NO if report.errors else EXIT_OK


def cmd_verify_theorem(cfg: RunConfig) -> int:
    report = _run(cfg)
    return EXIT_OK if report.reproduces_theorem() else EXIT_NO


def cmd_families(seed_name: str) -> int:
    try:
        seed = catalog(seed_name)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INPUT
    fam = cousins(seed, seed_name)
    for g in fam.graphs():
        print(encode_graph6(g))
    print(f"family {seed_name} size {len(fam)}")
    return EXIT_OK


def _parse(text: str, what: str):
    try:
        return decode_graph6(text)
    except (Graph6Error, GraphError) as exc:
        print(f"error: malformed graph6 for {what}: {exc}", file=sys.stderr)
        return None


def cmd_minor(host_g6: str, target_g6: str) -> int:
    host = _parse(host_g6, "host")
    target = _parse(target_g6, "target")
    if host is None or target is None:
        return EXIT_INPUT
    w = has_minor(host, target, "target")
    if w is None:
        print("none")
        return EXIT_NO
    print(w)
    return EXIT_OK


def cmd_simplify(g6: str, a: int, b: int) -> int:
    g = _parse(g6, "graph")
    if g is None:
        return EXIT_INPUT
    try:
        h, t = hat(g, a, b)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    # graph6 has no parallel edges; fall back to an edge list when needed
    print(encode_graph6(h) if h.is_simple() else f"n={h.n} edges={list(h.edges)}")
    print(TRACE_HEADER)
    print(t.as_row())
    return EXIT_OK


def _run_options(p):
    p.add_argument("--edges", type=int, default=23)
    p.add_argument("--min-degree", type=int, default=3)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--out", default="out")
    p.add_argument("--include-disconnected", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bipknot", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("enumerate", "sieve", "verify-theorem"):
        _run_options(sub.add_parser(name))
    p = sub.add_parser("families")
    p.add_argument("seed", help="one of " + ", ".join(CATALOG_NAMES))
    p = sub.add_parser("minor")
    p.add_argument("host")
    p.add_argument("target")
    p = sub.add_parser("simplify")
    p.add_argument("graph")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "families":
        return cmd_families(args.seed)
    if args.command == "minor":
        return cmd_minor(args.host, args.target)
    if args.command == "simplify":
        return cmd_simplify(args.graph, args.a, args.b)
    try:
        cfg = _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.command == "enumerate":
        return cmd_enumerate(cfg)
    if args.command == "sieve":
        return cmd_sieve(cfg)
    return cmd_verify_theorem(cfg)


if __name__ == "__main__":
    sys.exit(main())
