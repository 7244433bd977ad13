"""Command-line entry point: ``totdom {gen,verify,bounds,bench}``.

Exit codes: 0 success, 1 bound violated, 2 usage or precondition error,
3 I/O or generation failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import graph as gr
from .bounds import closed_bound, improvement_report
from .exact import Status, exact_gamma_t
from .greedy import MinDegreeTooSmall, UncoverableVertex, greedy_tds, verify_bound

OK, VIOLATED, USAGE, ENVIRONMENT = 0, 1, 2, 3

FAMILIES = ("k-regular", "min-degree", "complete", "cycle")
EXACT_MAX_ORDER = 20


class UsageError(Exception):
    pass


def fmt6(value: Fraction) -> str:
    """Six-decimal rendering rounded from the exact value."""
    return _fixed(Fraction(value), 6)


def _fixed(q: Fraction, digits: int) -> str:
    scaled = round(q * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


# --- graph family specs --------------------------------------------------


@dataclass(frozen=True)
class GraphFamilySpec:
    family: str
    n_x: int
    n_y: int
    k: int = 0
    extra_prob: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}")
        if self.n_x < 1 or self.n_y < 1:
            raise UsageError("side sizes must be positive")
        if self.family == "k-regular":
            if self.n_x != self.n_y:
                raise UsageError("k-regular family needs equal sides")
            if not 1 <= self.k <= self.n_x:
                raise UsageError(f"need 1 <= k <= n, got k={self.k}, n={self.n_x}")
        elif self.family == "min-degree":
            if not 1 <= self.k <= min(self.n_x, self.n_y):
                raise UsageError(f"need 1 <= k <= min side size, got k={self.k}")
            if not 0.0 <= self.extra_prob <= 1.0:
                raise UsageError("--p must lie in [0, 1]")
        elif self.family == "cycle":
            if self.n_x != self.n_y or self.n_x < 2:
                raise UsageError("cycle family needs equal sides of size >= 2")

    def generate(self) -> gr.BipartiteGraph:
        self.validate()
        if self.family == "k-regular":
            return gr.gen_k_regular(self.n_x, self.k, self.seed)
        if self.family == "min-degree":
            return gr.gen_min_degree(self.n_x, self.n_y, self.k, self.extra_prob, self.seed)
        if self.family == "complete":
            return gr.complete(self.n_x, self.n_y)
        return gr.cycle(self.n_x)


def _family_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("--n", type=int, help="vertices per side (sets both --nx and --ny)")
    p.add_argument("--nx", type=int)
    p.add_argument("--ny", type=int)
    p.add_argument("--k", type=int, default=0, help="degree parameter")
    p.add_argument("--p", type=float, default=0.0, help="extra-edge probability (min-degree)")
    p.add_argument("--seed", type=int, default=0)


def _spec_from_args(args) -> GraphFamilySpec:
    n_x = args.nx if args.nx is not None else args.n
    n_y = args.ny if args.ny is not None else args.n
    if n_x is None or n_y is None:
        raise UsageError("give --n or both --nx and --ny")
    return GraphFamilySpec(args.family, n_x, n_y, args.k, args.p, args.seed)


# --- subcommands ---------------------------------------------------------


def cmd_gen(args, out) -> int:
    spec = _spec_from_args(args)
    spec.validate()
    try:
        g = spec.generate()
    except gr.GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ENVIRONMENT
    try:
        gr.write(g, args.output, comments=[f"family={spec.family} k={spec.k} seed={spec.seed}"])
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ENVIRONMENT
    delta = gr.min_degree(g)
    print(f"n_x={g.n_x} n_y={g.n_y} m={g.m} delta={delta}", file=out)
    return OK


def cmd_verify(args, out) -> int:
    if (args.input is None) == (args.family is None):
        raise UsageError("give exactly one of an input file or --family")
    if args.input is not None:
        try:
            g = gr.read(args.input)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return ENVIRONMENT
    else:
        g = _spec_from_args(args).generate()
    rep = verify_bound(g)
    print(
        f"n={rep.n} k={rep.k} bound_float={fmt6(rep.bound)} henning={rep.henning:.6f}",
        file=out,
    )
    verdict = "SATISFIED" if rep.satisfied else "VIOLATED"
    print(f"|S|={rep.size} bound={rep.bound} {verdict}", file=out)
    return OK if rep.satisfied else VIOLATED


def _use_table(fmt: str | None, out) -> bool:
    if fmt is not None:
        return fmt == "table"
    return hasattr(out, "isatty") and out.isatty()


def _csv_writer(out):
    return csv.writer(out, lineterminator="\n")


def cmd_bounds(args, out) -> int:
    if args.kmax < 2:
        raise UsageError("--kmax must be at least 2")
    rows = improvement_report(args.kmax)
    header = ["k", "new_bound", "henning", "alon", "margin", "new_bound_exact"]
    body = [
        [
            r.k,
            fmt6(r.new_bound.exact),
            f"{r.henning:.6f}",
            f"{r.alon:.6f}",
            f"{r.margin:.6f}",
            str(r.new_bound.exact),
        ]
        for r in rows
    ]
    if _use_table(args.format, out):
        # exact fractions get unwieldy quickly; the table shows them only for small k
        print(f"{'k':>5} {'new_bound':>10} {'henning':>10} {'alon':>10} {'margin':>10}  exact", file=out)
        for row in body:
            exact = row[5] if len(row[5]) <= 40 else "..."
            print(f"{row[0]:>5} {row[1]:>10} {row[2]:>10} {row[3]:>10} {row[4]:>10}  {exact}", file=out)
    else:
        w = _csv_writer(out)
        w.writerow(header)
        w.writerows(body)
    return OK if all(r.margin > 0 for r in rows) else VIOLATED


def parse_range(text: str) -> list[int]:
    """``"6..10"`` -> ``[6, 7, 8, 9, 10]``; a bare integer is a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected 'lo..hi' or an integer") from None


def trial_seed(seed: int, n: int, k: int, trial: int) -> int:
    return random.Random(f"{seed}:{n}:{k}:{trial}").getrandbits(63)


BENCH_HEADER = [
    "n", "k", "seed", "greedy_size", "exact_size", "bound_num", "bound_den", "ratio",
]


def _bench_sides(family: str, n: int, n_x: int | None) -> tuple[int, int] | None:
    """Split the order ``n`` into side sizes, or None if the family has no such graph."""
    if family == "k-regular":
        return (n // 2, n // 2) if n % 2 == 0 and n >= 2 else None
    n_x = n // 2 if n_x is None else n_x
    return (n_x, n - n_x) if 1 <= n_x < n else None


def _bench_row(job):
    spec, n, k = job
    g = spec.generate()
    tds, _, _ = greedy_tds(g)
    exact = ""
    if g.order <= EXACT_MAX_ORDER:
        res = exact_gamma_t(g)
        if res.status is Status.OPTIMAL:
            exact = str(res.gamma_t)
    bound = g.order * closed_bound(k).exact
    ratio = Fraction(len(tds)) / bound
    return [n, k, spec.seed, len(tds), exact, bound.numerator, bound.denominator, fmt6(ratio)], ratio


def cmd_bench(args, out) -> int:
    ns = parse_range(args.n)
    ks = parse_range(args.k)
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    if args.family not in ("k-regular", "min-degree"):
        raise UsageError("bench supports the k-regular and min-degree families")
    jobs = []
    skipped = 0
    for n in ns:
        for k in ks:
            if k < 2:
                raise UsageError("bench needs k >= 2")
            sides = _bench_sides(args.family, n, args.nx)
            if sides is None or k > min(sides):
                skipped += 1
                continue
            for t in range(args.trials):
                seed = trial_seed(args.seed, n, k, t)
                spec = GraphFamilySpec(args.family, *sides, k, args.p, seed)
                spec.validate()
                jobs.append((spec, n, k))
    if skipped:
        print(f"# skipped {skipped} (n, k) pairs with no graph in the family", file=sys.stderr)
    try:
        if args.jobs > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(_bench_row, jobs, chunksize=8))
        else:
            results = [_bench_row(j) for j in jobs]
    except gr.GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ENVIRONMENT
    w = _csv_writer(out)
    w.writerow(BENCH_HEADER)
    w.writerows(row for row, _ in results)
    worst = max((r for _, r in results), default=None)
    if worst is None:
        print("# no trials", file=sys.stderr)
        return OK
    print(f"# rows={len(results)} max_ratio={fmt6(worst)} (must be <= 1)", file=sys.stderr)
    return OK if worst <= 1 else VIOLATED


# --- entry point ---------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totdom", description="Greedy total domination in bipartite graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and write it as an edge list")
    _family_args(p, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check the greedy set against the bound")
    p.add_argument("input", nargs="?")
    _family_args(p, required=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="compare the bound with Henning's and Alon's")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", choices=("table", "csv"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("bench", help="greedy vs exact vs bound on random graphs (CSV)")
    p.add_argument("--family", choices=("k-regular", "min-degree"), default="k-regular")
    p.add_argument("--n", required=True, help="graph order n_x + n_y, e.g. 6..10")
    p.add_argument("--nx", type=int, help="fixed X-side size (min-degree family)")
    p.add_argument("--k", required=True, help="minimum degree, e.g. 2..3")
    p.add_argument("--p", type=float, default=0.0, help="extra-edge probability (min-degree)")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except (UsageError, gr.GraphError, MinDegreeTooSmall, UncoverableVertex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture standard output."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
