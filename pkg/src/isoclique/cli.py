"""Command-line surface: enumerate, oracle, compare, bench.

Exit codes: 0 ok, 1 usage, 2 input error, 3 mismatch (compare),
4 timeout.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass, fields

from .enumeration import TimeLimitExceeded, UnsupportedKind, enumerate_maximal_isolated
from .graphs import TemporalGraph, delta_union_transform
from .ingest import IngestConfig, ParseError, bin_to_layers, parse_contact_list, scale_delta
from .isolation import FAST_KINDS, KINDS, USUALLY_MAX, IsolationSpec, parse_c
from .oracle import OracleCapsExceeded, brute_force_enumerate
from .results import ResultSet

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_TIMEOUT = 4

EPSILON = "0.001"
DEFAULT_C_GRID = (EPSILON, "1", "5", "25", "125")
DEFAULT_DELTA_GRID = (0, 125, 3125)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass
class RunReport:
    dataset: str
    kind: str
    c: str
    delta_base: int
    delta_layers: int
    num_cliques: int | None
    wall_time_s: float
    time_per_clique_s: float | None
    status: str = "ok"

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def row(self) -> list:
        n = self.num_cliques
        return [
            self.dataset, self.kind, self.c, self.delta_base, self.delta_layers,
            "" if n is None else n,
            f"{self.wall_time_s:.6f}",
            "" if self.time_per_clique_s is None else f"{self.time_per_clique_s:.6f}",
            self.status,
        ]


def _build_parser() -> _Parser:
    parser = _Parser(prog="isoclique",
                     description="Maximal isolated temporal clique enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, kinds_required=True):
        p.add_argument("--input", required=True, help="contact-list file")
        p.add_argument("--resolution", type=int, required=True,
                       help="seconds per layer")
        p.add_argument("--type", dest="kind", choices=KINDS,
                       required=kinds_required)
        p.add_argument("--c", default=EPSILON,
                       help="isolation parameter (exact decimal)")
        p.add_argument("--delta", type=int, default=0,
                       help="protocol delta in seconds before scaling")
        p.add_argument("--time-limit", type=float, default=None)

    p_enum = sub.add_parser("enumerate", help="run the fast enumerator")
    add_common(p_enum)
    p_enum.add_argument("--format", choices=("json", "csv", "text"),
                        default="text")
    p_enum.add_argument("--out", default=None)
    p_enum.add_argument("--threads", type=int, default=1)
    p_enum.add_argument("--report", default=None,
                        help="append a RunReport CSV row to this file")
    p_enum.add_argument("--oracle", action="store_true",
                        help="use the brute-force reference instead")

    p_orc = sub.add_parser("oracle", help="run the brute-force reference")
    add_common(p_orc)
    p_orc.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
    p_orc.add_argument("--out", default=None)
    p_orc.add_argument("--report", default=None)

    p_cmp = sub.add_parser("compare",
                           help="fast path vs oracle; exit 3 on mismatch")
    add_common(p_cmp)

    p_bench = sub.add_parser("bench", help="sweep the kind x c x delta grid")
    p_bench.add_argument("--input", required=True)
    p_bench.add_argument("--resolution", type=int, required=True)
    p_bench.add_argument("--types", nargs="+", choices=FAST_KINDS,
                         default=list(FAST_KINDS))
    p_bench.add_argument("--c-grid", nargs="+", default=list(DEFAULT_C_GRID))
    p_bench.add_argument("--delta-grid", nargs="+", type=int,
                         default=list(DEFAULT_DELTA_GRID))
    p_bench.add_argument("--out", default=None)
    p_bench.add_argument("--threads", type=int, default=1)
    p_bench.add_argument("--time-limit", type=float, default=None,
                         help="per-cell limit in seconds")
    return parser


def _load_graph(path: str, resolution: int) -> TemporalGraph:
    with open(path, "r", encoding="utf-8") as fh:
        records = parse_contact_list(fh)
    return bin_to_layers(records, IngestConfig(resolution=resolution))


def _apply_delta(tg: TemporalGraph, delta_base: int, resolution: int):
    """Scale the protocol delta to layers and collapse windows."""
    if delta_base == 0:
        return tg, 0
    lifetime = tg.lifetime_s if tg.lifetime_s is not None else tg.tau * resolution
    layers = scale_delta(delta_base, lifetime, tg.num_time_edges, resolution)
    if layers >= tg.tau:
        raise ValueError(
            f"scaled delta ({layers} layers) exceeds lifetime ({tg.tau} layers)"
        )
    return delta_union_transform(tg, layers), layers


def _labels_of(tg: TemporalGraph, vertices) -> list[str]:
    if tg.labels:
        return sorted(tg.labels[v] for v in vertices)
    return sorted((str(v) for v in vertices), key=lambda s: (len(s), s))


def _write_cliques(tg, rs: ResultSet, fmt: str, out) -> None:
    entries = rs.sorted_entries()
    if fmt == "json":
        payload = [
            {"vertices": _labels_of(tg, tc.vertices), "start": tc.a, "end": tc.b}
            for tc in entries
        ]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["start", "end", "vertices"])
        for tc in entries:
            writer.writerow([tc.a, tc.b, " ".join(_labels_of(tg, tc.vertices))])
    else:
        for tc in entries:
            out.write(
                f"[{tc.a},{tc.b}] {{{', '.join(_labels_of(tg, tc.vertices))}}}\n"
            )


def _append_report(path: str, report: RunReport) -> None:
    new_file = not os.path.exists(path)
    with open(path, "a", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if new_file:
            writer.writerow(RunReport.header())
        writer.writerow(report.row())


def _run_one(tg, spec, use_oracle, threads, time_limit) -> tuple[ResultSet, float]:
    start = time.monotonic()
    if use_oracle:
        rs = brute_force_enumerate(tg, spec)
    else:
        rs = enumerate_maximal_isolated(
            tg, spec, threads=threads, time_limit=time_limit
        )
    return rs, time.monotonic() - start


def _cmd_enumerate(args, use_oracle: bool) -> int:
    if args.kind == USUALLY_MAX and not use_oracle:
        print(
            f"error: no bounded fast enumerator is known for {USUALLY_MAX}; "
            "rerun with --oracle",
            file=sys.stderr,
        )
        return EXIT_USAGE
    tg = _load_graph(args.input, args.resolution)
    tg, delta_layers = _apply_delta(tg, args.delta, args.resolution)
    spec = IsolationSpec(args.kind, parse_c(args.c))
    dataset = os.path.basename(args.input)
    threads = getattr(args, "threads", 1)

    try:
        rs, wall = _run_one(tg, spec, use_oracle, threads, args.time_limit)
    except TimeLimitExceeded:
        if getattr(args, "report", None):
            _append_report(args.report, RunReport(
                dataset, args.kind, args.c, args.delta, delta_layers,
                None, args.time_limit, None, status="timeout",
            ))
        print("error: time limit exceeded; report row marked timeout",
              file=sys.stderr)
        return EXIT_TIMEOUT

    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        _write_cliques(tg, rs, args.format, out)
    finally:
        if args.out:
            out.close()
    if getattr(args, "report", None):
        _append_report(args.report, RunReport(
            dataset, args.kind, args.c, args.delta, delta_layers,
            len(rs), wall, wall / max(len(rs), 1),
        ))
    return EXIT_OK


def _cmd_compare(args) -> int:
    if args.kind == USUALLY_MAX:
        print(f"error: {USUALLY_MAX} has no fast path to compare against",
              file=sys.stderr)
        return EXIT_USAGE
    tg = _load_graph(args.input, args.resolution)
    tg, _ = _apply_delta(tg, args.delta, args.resolution)
    spec = IsolationSpec(args.kind, parse_c(args.c))
    fast = enumerate_maximal_isolated(tg, spec, time_limit=args.time_limit)
    reference = brute_force_enumerate(tg, spec)
    if fast.as_set() == reference.as_set():
        print(f"ok: {len(fast)} cliques")
        return EXIT_OK
    only_fast = fast.as_set() - reference.as_set()
    only_ref = reference.as_set() - fast.as_set()
    for tc in sorted(only_fast):
        print(f"only fast:   [{tc.a},{tc.b}] {sorted(tc.vertices)}")
    for tc in sorted(only_ref):
        print(f"only oracle: [{tc.a},{tc.b}] {sorted(tc.vertices)}")
    return EXIT_MISMATCH


def _cmd_bench(args) -> int:
    base = _load_graph(args.input, args.resolution)
    dataset = os.path.basename(args.input)
    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(RunReport.header())
        for kind in args.types:
            for c_text in args.c_grid:
                spec = IsolationSpec(kind, parse_c(c_text))
                for delta_base in args.delta_grid:
                    try:
                        tg, delta_layers = _apply_delta(
                            base, delta_base, args.resolution
                        )
                        rs, wall = _run_one(
                            tg, spec, False, args.threads, args.time_limit
                        )
                        report = RunReport(
                            dataset, kind, c_text, delta_base, delta_layers,
                            len(rs), wall, wall / max(len(rs), 1),
                        )
                    except TimeLimitExceeded:
                        report = RunReport(
                            dataset, kind, c_text, delta_base, delta_layers,
                            None, args.time_limit, None, status="timeout",
                        )
                    writer.writerow(report.row())
                    out.flush()
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args, use_oracle=args.oracle)
        if args.command == "oracle":
            return _cmd_enumerate(args, use_oracle=True)
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "bench":
            return _cmd_bench(args)
        raise AssertionError(args.command)
    except (OSError, ParseError, OracleCapsExceeded, ValueError) as exc:
        if isinstance(exc, UnsupportedKind):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
