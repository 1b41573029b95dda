"""Command line: ``gapmatch scan|stats|selftest|bench``."""
from __future__ import annotations

import argparse
import math
import random
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .dictionary import DictionaryError, parse_dictionary
from .engine import EngineStats, GappedIndex, scan, scan_chunked
from .generate import plant, random_dictionary, random_instance, random_text
from .occurrence import format_jsonl, format_tsv
from .oracle import naive_scan

EXIT_PARSE = 2
EXIT_IO = 3
ENGINES = ("grid", "lookup", "oracle")


@dataclass
class RunConfig:
    dict_path: str
    text_path: str = "-"
    engine: str = "grid"
    chunked: bool = False
    all_gaps: bool = False
    one_based: bool = False
    output: str = "tsv"
    seed: int = 42

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.engine == "oracle" and self.chunked:
            raise ValueError("the oracle engine scans whole texts only; drop --chunked")


def _read(path: str, stdin) -> bytes:
    if path == "-":
        return stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load_dictionary(path: str, stderr):
    try:
        with open(path, "rb") as fh:
            return parse_dictionary(fh)
    except OSError as exc:
        print(f"gapmatch: cannot read dictionary: {exc}", file=stderr)
        raise SystemExit(EXIT_IO)
    except DictionaryError as exc:
        print(f"gapmatch: {path}: {exc}", file=stderr)
        raise SystemExit(EXIT_PARSE)


def cmd_scan(config: RunConfig, stdin=sys.stdin, stdout=sys.stdout, stderr=sys.stderr) -> int:
    dictionary = _load_dictionary(config.dict_path, stderr)
    try:
        text = _read(config.text_path, stdin)
    except OSError as exc:
        print(f"gapmatch: cannot read text: {exc}", file=stderr)
        return EXIT_IO
    if config.engine == "oracle":
        occ = naive_scan(dictionary, text, config.all_gaps)
    else:
        index = GappedIndex(dictionary, backends=(config.engine,))
        run = scan_chunked if config.chunked else scan
        occ = run(index, text, config.engine, config.all_gaps)
    fmt = format_jsonl if config.output == "jsonl" else format_tsv
    stdout.write(fmt(occ, config.one_based))
    return 0


def index_stats(index: GappedIndex) -> list[tuple[str, object]]:
    dic = index.dictionary
    rows: list[tuple[str, object]] = [
        ("d", dic.d),
        ("original_patterns", sum(len(a) for a in dic.aliases)),
        ("total_len", dic.total_len),
        ("alpha", dic.alpha),
        ("beta", dic.beta),
        ("max_span", dic.max_span),
    ]
    for name, marked in (("tree_f", index.marked_f), ("tree_s", index.marked_s)):
        n = len(marked.tree)
        bound = int(math.log2(n)) + 1
        rows += [
            (f"{name}.nodes", n),
            (f"{name}.marked", marked.vertical.count),
            (f"{name}.vertical_paths", marked.decomposition.count),
            (f"{name}.max_crossings", f"{max(marked.decomposition.crossings())} (bound floor(log2 N)+1 = {bound})"),
            (f"{name}.max_mark_intervals", max(len(iv) for iv in marked.intervals)),
        ]
    if index.inter is not None:
        mf, ms = index.inter.shape
        rows += [("inter.shape", f"{mf}x{ms}"), ("inter.fill_ops", index.inter.fill_ops)]
    return rows


def cmd_stats(dict_path: str, stdout=sys.stdout, stderr=sys.stderr) -> int:
    index = GappedIndex(_load_dictionary(dict_path, stderr))
    for key, value in index_stats(index):
        print(f"{key}: {value}", file=stdout)
    return 0


def run_selftest(seed: int, trials: int, stdout=sys.stdout,
                 fault: Optional[Callable[[set], set]] = None) -> int:
    """Random differential trials: grid == lookup == oracle and chunked == whole.
    ``fault`` (tests only) tampers with the grid result to prove failures surface."""
    failures = 0
    for t in range(trials):
        trial_seed = seed * 1_000_003 + t
        inst = random_instance(random.Random(trial_seed), max_n=600, max_d=32)
        index = GappedIndex(inst.dictionary)
        grid = scan(index, inst.text, "grid")
        if fault is not None:
            grid = fault(grid)
        lookup = scan(index, inst.text, "lookup")
        oracle = naive_scan(inst.dictionary, inst.text)
        chunked = scan_chunked(index, inst.text, "lookup")
        if not (grid == lookup == oracle == chunked):
            failures += 1
            print(f"FAIL trial={t} trial_seed={trial_seed} {inst.describe()}", file=stdout)
            print(f"  grid={len(grid)} lookup={len(lookup)} oracle={len(oracle)} chunked={len(chunked)}",
                  file=stdout)
    print(f"selftest seed={seed} trials={trials} failures={failures}", file=stdout)
    return 1 if failures else 0


def run_bench(seed: int, d: int, n: int, sigma: int, alpha: int, beta: int, nested: bool = False,
              stdout=sys.stdout) -> int:
    rng = random.Random(seed)
    dic = random_dictionary(rng, d, sigma, alpha, beta, nested=nested)
    text = random_text(rng, n, sigma)
    plant(rng, text, dic, max(1, n // 200))
    text = bytes(text)
    print(f"bench seed={seed} d={dic.d} total_len={dic.total_len} n={n} sigma={sigma} "
          f"alpha={alpha} beta={beta}", file=stdout)
    for backend in ("grid", "lookup"):
        t0 = time.perf_counter()
        index = GappedIndex(dic, backends=(backend,))
        t1 = time.perf_counter()
        stats = EngineStats()
        occ = scan(index, text, backend, stats=stats)
        t2 = time.perf_counter()
        rate = n / (t2 - t1) if t2 > t1 else float("inf")
        print(f"{backend:>6}: build {t1 - t0:.3f}s  scan {t2 - t1:.3f}s  "
              f"{rate:,.0f} symbols/s  occ={len(occ)}  intersections={stats.intersections}",
              file=stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapmatch", description="Report where two-part patterns with a bounded wildcard gap occur in a text.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="report pattern occurrences in a text")
    p.add_argument("dictionary")
    p.add_argument("text", nargs="?", default="-", help="text file, '-' for standard input")
    p.add_argument("--engine", choices=ENGINES, default="grid")
    p.add_argument("--chunked", action="store_true", help="scan in overlapping pieces")
    p.add_argument("--all-gaps", action="store_true", help="report every qualifying gap")
    p.add_argument("--one-based", action="store_true", help="print 1-based positions")
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")

    p = sub.add_parser("stats", help="print index statistics")
    p.add_argument("dictionary")

    p = sub.add_parser("selftest", help="randomized differential self-test")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("bench", help="time index builds and scans")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--d", type=int, default=256)
    p.add_argument("--n", type=int, default=20000)
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=4)
    p.add_argument("--nested", action="store_true", help="draw subpatterns from nested pools")
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "scan":
            try:
                config = RunConfig(args.dictionary, args.text, args.engine, args.chunked,
                                   args.all_gaps, args.one_based, args.format)
            except ValueError as exc:
                print(f"gapmatch: {exc}", file=stderr)
                return EXIT_PARSE
            return cmd_scan(config, stdin, stdout, stderr)
        if args.command == "stats":
            return cmd_stats(args.dictionary, stdout, stderr)
        if args.command == "selftest":
            return run_selftest(args.seed, args.trials, stdout)
        return run_bench(args.seed, args.d, args.n, args.sigma, args.alpha, args.beta, args.nested, stdout)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
