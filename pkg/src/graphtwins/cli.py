"""``twins`` command-line front end and the ``G(n, p)`` bench harness.

Every subcommand reads a graph in edge-list format (``-`` for stdin) and
writes one report to stdout. Exit status: 0 on success, 1 when an algorithm
fails or returns a pair that does not re-validate, 2 on usage or input
errors. Pairs produced by the library are always re-checked here with
:func:`~graphtwins.graph.check_twins` before being reported.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .criteria import detect_criteria, perfect_twins
from .discrepancy import (
    almost_twins_extraction,
    almost_twins_local_search,
    extraction_bound,
    local_search_bound,
    prefer_extraction,
)
from .errors import (
    ConstructionError,
    GraphParseError,
    InternalInvariantError,
    OracleCapError,
    PreconditionError,
)
from .forest import forest_bound, forest_twins
from .generators import Family, GenSpec, derive_seed, gen_gnp
from .graph import Graph, TwinPair, check_twins, format_graph, parse_graph
from .oracle import DEFAULT_CAP, exact_t
from .sparse import sparse_twins

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

BENCH_ORACLE_MAX_N = 14


# ---------------------------------------------------------------------
# reports

@dataclass
class RunReport:
    algorithm: str
    n: int
    e: int
    result: TwinPair
    bound: float | None = None
    bound_kind: str | None = None
    bound_satisfied: bool | None = None
    trace: dict = field(default_factory=dict)
    wall_time_ms: float = 0.0

    @property
    def size(self) -> int:
        return self.result.size

    @property
    def disc(self) -> int:
        return self.result.disc

    @classmethod
    def build(cls, g: Graph, algorithm: str, a, b, *, bound=None, bound_kind=None,
              trace=None, wall_time_ms: float = 0.0) -> RunReport:
        """Recount the pair on ``g`` and judge the bound from the recount."""
        pair = TwinPair.of(g, a, b)
        satisfied = None
        if bound is not None:
            satisfied = pair.disc <= bound if bound_kind == "max_disc" else pair.size >= bound
        return cls(algorithm, g.n, g.m, pair, bound, bound_kind, satisfied, trace or {}, wall_time_ms)

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "n": self.n,
            "e": self.e,
            "a": list(self.result.a),
            "b": list(self.result.b),
            "edges_a": self.result.edges_a,
            "edges_b": self.result.edges_b,
            "size": self.size,
            "disc": self.disc,
            "bound": self.bound,
            "bound_kind": self.bound_kind,
            "bound_satisfied": self.bound_satisfied,
            "trace": self.trace,
            "wall_time_ms": self.wall_time_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> RunReport:
        pair = TwinPair(tuple(d["a"]), tuple(d["b"]), d["edges_a"], d["edges_b"])
        if pair.size != d["size"] or pair.disc != d["disc"]:
            raise ValueError("report size/disc disagree with its own sets")
        return cls(d["algorithm"], d["n"], d["e"], pair, d["bound"], d["bound_kind"],
                   d["bound_satisfied"], d["trace"], d["wall_time_ms"])


@dataclass
class BenchReport:
    family: GenSpec
    samples: int
    perfect_twin_fraction: float
    size_histogram: dict[int, int]
    seed: int
    oracle_checked: int = 0

    def to_dict(self) -> dict:
        return {
            "family": self.family.to_dict(),
            "samples": self.samples,
            "perfect_twin_fraction": self.perfect_twin_fraction,
            "size_histogram": {str(k): v for k, v in sorted(self.size_histogram.items())},
            "seed": self.seed,
            "oracle_checked": self.oracle_checked,
        }

    @classmethod
    def from_dict(cls, d: dict) -> BenchReport:
        fam = d["family"]
        spec = GenSpec(Family(fam["family"]), fam["n"], fam["p"], fam["m"], fam["criterion"], fam["seed"])
        hist = {int(k): v for k, v in d["size_histogram"].items()}
        return cls(spec, d["samples"], d["perfect_twin_fraction"], hist, d["seed"], d.get("oracle_checked", 0))


# ---------------------------------------------------------------------
# bench harness

def _bench_sample(args: tuple[int, float, int]) -> tuple[bool, int, bool]:
    """``(perfect, certified_size, oracle_used)`` for one ``G(n, p)`` sample."""
    n, p, sub_seed = args
    g = gen_gnp(n, p, sub_seed)
    found = perfect_twins(g, opportunistic=True)
    perfect = False
    size = 0
    if found is not None:
        if not check_twins(g, found.pair.a, found.pair.b).valid or found.pair.size * 2 != n:
            raise InternalInvariantError(f"bench: {found.method} returned an invalid pair")
        perfect, size = True, n // 2
    oracle_used = False
    if n <= BENCH_ORACLE_MAX_N:
        oracle_used = True
        t = exact_t(g).t
        if perfect and t != n // 2:
            raise InternalInvariantError(f"bench: perfect twins found but oracle says t={t}")
        size = t
    return perfect, size, oracle_used


def bench_gnp(n: int, p: float, samples: int, seed: int, workers: int = 1) -> BenchReport:
    """Fraction of ``G(n, p)`` samples where perfect twins were constructed.

    Sample ``i`` uses sub-seed ``derive_seed(seed, i)``, so the report does not
    depend on ``workers``. The histogram counts, per sample, the largest twin
    size the harness certified: ``n/2`` for a constructed perfect pair, the
    oracle's ``t(G)`` when ``n <= 14``, else 0.
    """
    if n % 2:
        raise ValueError("bench_gnp needs an even n")
    if samples < 1:
        raise ValueError("bench_gnp needs at least one sample")
    jobs = [(n, p, derive_seed(seed, i)) for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_bench_sample, jobs, chunksize=max(1, samples // (4 * workers))))
    else:
        results = [_bench_sample(j) for j in jobs]
    perfect = sum(1 for ok, _, _ in results if ok)
    hist = Counter(size for _, size, _ in results)
    return BenchReport(
        family=GenSpec(Family.GNP, n=n, p=p, seed=seed),
        samples=samples,
        perfect_twin_fraction=perfect / samples,
        size_histogram=dict(sorted(hist.items())),
        seed=seed,
        oracle_checked=sum(1 for *_, used in results if used),
    )


# ---------------------------------------------------------------------
# command line

class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default; keep it testable
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated vertex list, got {text!r}") from None


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twins", description="Find twins (disjoint equal-size vertex sets inducing equally many edges).")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_graph(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="edge-list file, or - for stdin")
        p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        return p

    p = with_graph("check", "validate a candidate pair")
    p.add_argument("--a", type=_vertex_list, required=True)
    p.add_argument("--b", type=_vertex_list, required=True)

    p = with_graph("exact", "exhaustive t(G) for small graphs")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    with_graph("approx", "low-discrepancy pairs by extraction and local search")
    with_graph("sparse", "twins through the sparse-graph pipeline")
    with_graph("criteria", "perfect-twin criteria and their constructions")
    with_graph("forest", "twins of size >= ceil(n/2) - 1 in a forest")

    p = sub.add_parser("gen", help="generate a graph (edge-list text unless --format json)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--criterion", type=int, choices=(1, 2, 3, 4), default=1)
    p.add_argument("--seed", type=_u64, default=0)

    p = sub.add_parser("bench", help="perfect-twin frequency over G(n, p) samples")
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        json.dump(payload, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _report_lines(r: RunReport) -> list[str]:
    lines = [
        f"algorithm: {r.algorithm}",
        f"n={r.n} e={r.e}",
        f"a: {' '.join(map(str, r.result.a))}",
        f"b: {' '.join(map(str, r.result.b))}",
        f"size={r.size} disc={r.disc} (e(a)={r.result.edges_a}, e(b)={r.result.edges_b})",
    ]
    if r.bound is not None:
        rel = "<=" if r.bound_kind == "max_disc" else ">="
        lines.append(f"bound: {r.bound_kind} {rel} {r.bound:g} -> {'ok' if r.bound_satisfied else 'VIOLATED'}")
    return lines


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, (time.perf_counter() - start) * 1000.0


def _finish_run(g: Graph, report: RunReport, fmt: str, must_be_twins: bool) -> int:
    _emit(report.to_dict(), fmt, _report_lines(report))
    if must_be_twins and not check_twins(g, report.result.a, report.result.b).valid:
        print(f"twins: {report.algorithm} returned a pair that is not twins", file=sys.stderr)
        return EXIT_FAILURE
    if report.bound_satisfied is False:
        print(f"twins: {report.algorithm} missed its bound", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _cmd_check(args, g: Graph) -> int:
    res = check_twins(g, args.a, args.b)
    payload = {"algorithm": "check", "n": g.n, "e": g.m, "a": sorted(args.a), "b": sorted(args.b),
               "valid": res.valid, "violations": list(res.violations)}
    lines = [f"valid: {res.valid}"] + [f"violation: {v}" for v in res.violations]
    _emit(payload, args.format, lines)
    return EXIT_OK if res.valid else EXIT_FAILURE


def _cmd_exact(args, g: Graph) -> int:
    res, ms = _timed(lambda: exact_t(g, cap=args.cap))
    report = RunReport.build(g, "exact", res.witness.a, res.witness.b,
                             trace={"t": res.t, "nodes_examined": res.nodes_examined}, wall_time_ms=ms)
    return _finish_run(g, report, args.format, must_be_twins=True)


def _cmd_approx(args, g: Graph) -> int:
    start = time.perf_counter()
    p1, t1 = almost_twins_extraction(g)
    p2, t2 = almost_twins_local_search(g)
    ms = (time.perf_counter() - start) * 1000.0
    if prefer_extraction(p1, p2):
        best, chosen, bound = p1, t1, extraction_bound(g.n)
    else:
        best, chosen, bound = p2, t2, local_search_bound(g)
    report = RunReport.build(g, "approx", best.a, best.b, bound=bound, bound_kind="max_disc",
                             trace={"chosen": chosen.branch.value, "extraction": t1.to_dict(),
                                    "local_search": t2.to_dict()}, wall_time_ms=ms)
    return _finish_run(g, report, args.format, must_be_twins=False)


def _cmd_sparse(args, g: Graph) -> int:
    (pair, trace), ms = _timed(sparse_twins, g)
    bound = trace.bound if trace.bound > 0 else None
    report = RunReport.build(g, "sparse", pair.a, pair.b, bound=bound, bound_kind="min_size" if bound else None,
                             trace=trace.to_dict(), wall_time_ms=ms)
    code = _finish_run(g, report, args.format, must_be_twins=True)
    if trace.not_twins:
        print("twins: sparse pipeline fell back to local search and did not reach discrepancy 0", file=sys.stderr)
        return EXIT_FAILURE
    return code


def _cmd_criteria(args, g: Graph) -> int:
    start = time.perf_counter()
    report = detect_criteria(g)
    found = perfect_twins(g)
    ms = (time.perf_counter() - start) * 1000.0
    trace = {"criteria": report.to_dict(), "method": found.method if found else None}
    a, b = (found.pair.a, found.pair.b) if found else ((), ())
    run = RunReport.build(g, "criteria", a, b, trace=trace, wall_time_ms=ms)
    lines = _report_lines(run) + [f"satisfied criteria: {sorted(report.satisfied)}",
                                  f"method: {trace['method']}"]
    _emit(run.to_dict(), args.format, lines)
    if found and not check_twins(g, a, b).valid:
        print("twins: perfect-twin construction did not re-validate", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _cmd_forest(args, g: Graph) -> int:
    (pair, trace), ms = _timed(forest_twins, g)
    report = RunReport.build(g, "forest", pair.a, pair.b, bound=forest_bound(g.n), bound_kind="min_size",
                             trace=trace.to_dict(), wall_time_ms=ms)
    return _finish_run(g, report, args.format, must_be_twins=True)


def _cmd_gen(args) -> int:
    spec = GenSpec(Family(args.family), n=args.n, p=args.p, m=args.m, criterion=args.criterion, seed=args.seed)
    g = spec.build()
    if args.format == "json":
        _emit({"spec": spec.to_dict(), "n": g.n, "edges": [list(e) for e in g.edges]}, "json", [])
    else:
        sys.stdout.write(format_graph(g, comment=json.dumps(spec.to_dict())))
    return EXIT_OK


def _cmd_bench(args) -> int:
    rep = bench_gnp(args.n, args.p, args.samples, args.seed, workers=args.workers)
    lines = [f"G({args.n}, {args.p}) x {args.samples}, seed {args.seed}",
             f"perfect_twin_fraction: {rep.perfect_twin_fraction:.4f}"]
    lines += [f"size {k}: {v}" for k, v in sorted(rep.size_histogram.items())]
    _emit(rep.to_dict(), args.format, lines)
    return EXIT_OK


_GRAPH_COMMANDS = {
    "check": _cmd_check,
    "exact": _cmd_exact,
    "approx": _cmd_approx,
    "sparse": _cmd_sparse,
    "criteria": _cmd_criteria,
    "forest": _cmd_forest,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "bench":
            return _cmd_bench(args)
        g = _read_graph(args.file)
        return _GRAPH_COMMANDS[args.command](args, g)
    except (GraphParseError, OracleCapError, PreconditionError, OSError, ValueError) as exc:
        print(f"twins: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalInvariantError, ConstructionError) as exc:
        print(f"twins: algorithm failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
