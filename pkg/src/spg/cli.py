"""Command-line surface: single queries, batch runs, query generation.

Exit codes: 0 success (an empty result is still success), 1 flag or
usage errors and eve/oracle divergence in batch mode, 2 unreadable or
malformed input files, 3 oracle path-count overflow.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from pathlib import Path

from .graph import (
    MAX_K,
    DirectedGraph,
    EdgeListParseError,
    Query,
    QuerySampleError,
    load_graph,
    parse_query_file,
    sample_queries,
    write_query_file,
)
from .oracle import (
    DEFAULT_PATH_LIMIT,
    PathLimitError,
    enumerate_simple_paths,
    oracle_spg,
)
from .pipeline import PipelineOptions, answer_query, upper_bound_graph
from .report import (
    QueryRecord,
    build_report,
    error_record,
    eve_record,
    oracle_record,
    report_to_json,
    upper_record,
    write_records_tsv,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_OVERFLOW = 3

MODES = ("eve", "upper", "oracle")


class CliError(Exception):
    """Fatal command error carrying its exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract reserves 2 for bad data
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="spg",
        description=(
            "Compute the union of all k-hop-bounded simple s -> t paths "
            "of a directed graph."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    query = sub.add_parser("query", help="answer a single query on stdout")
    query.add_argument("--graph", required=True, help="edge-list file, 'u v' per line")
    query.add_argument("--source", required=True, type=int, help="source vertex label")
    query.add_argument("--target", required=True, type=int, help="target vertex label")
    query.add_argument("--k", required=True, type=int, help="hop budget")
    query.add_argument(
        "--mode",
        choices=MODES,
        default="eve",
        help="eve: exact staged pipeline; upper: label-{1,2} superset; "
        "oracle: brute-force enumeration",
    )
    query.add_argument(
        "--format",
        dest="fmt",
        choices=("edges", "dot", "json"),
        default="edges",
    )
    query.add_argument("--no-pruning", action="store_true", help="ablation switch")
    query.add_argument("--no-ordering", action="store_true", help="ablation switch")
    query.add_argument(
        "--seed",
        type=int,
        default=0,
        help="accepted for batch parity; single queries are deterministic",
    )
    query.add_argument(
        "--path-limit",
        type=int,
        default=DEFAULT_PATH_LIMIT,
        help="oracle path-count cap before aborting with exit 3",
    )
    query.set_defaults(handler=cmd_query)

    batch = sub.add_parser(
        "batch", help="run many queries, write edge files, records.tsv, report.json"
    )
    batch.add_argument("--graph", required=True)
    workload = batch.add_mutually_exclusive_group(required=True)
    workload.add_argument("--queries", help="TSV query file: s<TAB>t<TAB>k")
    workload.add_argument(
        "--gen", type=int, metavar="N", help="sample N query pairs instead"
    )
    batch.add_argument("--k", type=int, help="hop budget for --gen")
    batch.add_argument("--seed", type=int, default=0, help="sampling seed for --gen")
    batch.add_argument(
        "--mode",
        default="eve",
        help="comma-separated subset of eve,upper,oracle; running eve and "
        "oracle together checks their edge sets for equality",
    )
    batch.add_argument("--out", required=True, help="output directory")
    batch.add_argument(
        "--parallel", type=int, default=1, metavar="W", help="worker processes"
    )
    batch.add_argument("--no-pruning", action="store_true")
    batch.add_argument("--no-ordering", action="store_true")
    batch.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    batch.add_argument("--path-limit", type=int, default=DEFAULT_PATH_LIMIT)
    batch.set_defaults(handler=cmd_batch)

    gen = sub.add_parser("gen-queries", help="sample a reproducible query workload")
    gen.add_argument("--graph", required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", help="output file (default: stdout)")
    gen.set_defaults(handler=cmd_gen_queries)
    return parser


def _load(path: str) -> DirectedGraph:
    try:
        return load_graph(path)
    except OSError as exc:
        raise CliError(EXIT_DATA, f"cannot read graph file: {exc}") from exc
    except EdgeListParseError as exc:
        raise CliError(EXIT_DATA, f"{path}: {exc}") from exc


def _resolve_query(g: DirectedGraph, source: int, target: int, k: int) -> Query:
    for name, label in (("source", source), ("target", target)):
        if label not in g.label_index:
            raise CliError(
                EXIT_USAGE, f"{name} vertex {label} does not occur in the graph"
            )
    try:
        return Query(g.label_index[source], g.label_index[target], k)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc


def _check_k(k: int | None) -> int:
    if k is None:
        raise CliError(EXIT_USAGE, "--gen requires --k")
    if not 1 <= k <= MAX_K:
        raise CliError(EXIT_USAGE, f"hop budget must be in [1, {MAX_K}], got {k}")
    return k


def _external_edges(
    g: DirectedGraph, edges: list[tuple[int, int]]
) -> list[tuple[int, int]]:
    # internal indices follow ascending external labels, so order survives
    return [(g.labels[u], g.labels[v]) for u, v in edges]


def _run_mode(
    g: DirectedGraph,
    q: Query,
    mode: str,
    options: PipelineOptions,
    path_limit: int,
    index: int,
) -> tuple[QueryRecord, list[tuple[int, int]]]:
    if mode == "eve":
        spg = answer_query(g, q, options)
        return eve_record(index, g, q, spg), _external_edges(g, spg.edges)
    if mode == "upper":
        ub, _, phase_ms = upper_bound_graph(g, q, options)
        return (
            upper_record(index, g, q, ub, phase_ms),
            _external_edges(g, ub.selected_edges()),
        )
    tick = time.perf_counter()
    spg = oracle_spg(enumerate_simple_paths(g, q, limit=path_limit))
    elapsed_ms = (time.perf_counter() - tick) * 1000.0
    return oracle_record(index, g, q, spg, elapsed_ms), _external_edges(g, spg.edges)


def format_dot(g: DirectedGraph, q: Query, edges: list[tuple[int, int]]) -> str:
    """DOT rendering with the source boxed and the target double-circled."""
    lines = ["digraph spg {"]
    lines.append(f'  "{g.labels[q.s]}" [shape=box];')
    lines.append(f'  "{g.labels[q.t]}" [shape=doublecircle];')
    for u, v in edges:
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _format_output(
    fmt: str,
    g: DirectedGraph,
    q: Query,
    record: QueryRecord,
    edges: list[tuple[int, int]],
) -> str:
    if fmt == "edges":
        return "".join(f"{u} {v}\n" for u, v in edges)
    if fmt == "dot":
        return format_dot(g, q, edges)
    payload = {"record": asdict(record), "edges": [list(edge) for edge in edges]}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_query(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    q = _resolve_query(g, args.source, args.target, args.k)
    options = PipelineOptions(
        pruning=not args.no_pruning, ordering=not args.no_ordering
    )
    try:
        record, edges = _run_mode(g, q, args.mode, options, args.path_limit, 0)
    except PathLimitError as exc:
        raise CliError(EXIT_OVERFLOW, str(exc)) from exc
    sys.stdout.write(_format_output(args.fmt, g, q, record, edges))
    return EXIT_OK


TaskResult = tuple[list[QueryRecord], dict[tuple[int, str], str]]


def _run_task(
    g: DirectedGraph,
    index: int,
    q: Query,
    modes: list[str],
    options: PipelineOptions,
    path_limit: int,
) -> TaskResult:
    """All requested modes for one query; failures become error records."""
    records: list[QueryRecord] = []
    edge_texts: dict[tuple[int, str], str] = {}
    edges_by_mode: dict[str, list[tuple[int, int]]] = {}
    for mode in modes:
        try:
            record, edges = _run_mode(g, q, mode, options, path_limit, index)
        except PathLimitError as exc:
            records.append(error_record(index, g, q, mode, str(exc)))
            continue
        records.append(record)
        edges_by_mode[mode] = edges
        edge_texts[(index, mode)] = "".join(f"{u} {v}\n" for u, v in edges)
    if "eve" in edges_by_mode and "oracle" in edges_by_mode:
        verdict = edges_by_mode["eve"] == edges_by_mode["oracle"]
        for record in records:
            if record.mode == "eve":
                record.matches_oracle = verdict
    return records, edge_texts


_WORKER: dict = {}


def _init_worker(
    graph_path: str, modes: list[str], options: PipelineOptions, path_limit: int
) -> None:
    _WORKER["graph"] = load_graph(graph_path)
    _WORKER["modes"] = modes
    _WORKER["options"] = options
    _WORKER["path_limit"] = path_limit


def _worker_task(task: tuple[int, Query]) -> TaskResult:
    index, q = task
    return _run_task(
        _WORKER["graph"],
        index,
        q,
        _WORKER["modes"],
        _WORKER["options"],
        _WORKER["path_limit"],
    )


def cmd_batch(args: argparse.Namespace) -> int:
    modes = list(dict.fromkeys(m.strip() for m in args.mode.split(",") if m.strip()))
    if not modes or any(mode not in MODES for mode in modes):
        raise CliError(
            EXIT_USAGE,
            f"--mode must be a comma-separated subset of {','.join(MODES)}",
        )
    g = _load(args.graph)
    if args.queries is not None:
        try:
            with open(args.queries, encoding="utf-8") as handle:
                queries = parse_query_file(handle, g)
        except OSError as exc:
            raise CliError(EXIT_DATA, f"cannot read query file: {exc}") from exc
        except EdgeListParseError as exc:
            raise CliError(EXIT_DATA, f"{args.queries}: {exc}") from exc
    else:
        try:
            queries = sample_queries(g, _check_k(args.k), args.gen, args.seed)
        except QuerySampleError as exc:
            raise CliError(EXIT_USAGE, str(exc)) from exc

    out_dir = Path(args.out)
    edges_dir = out_dir / "edges"
    try:
        edges_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(EXIT_DATA, f"cannot create output directory: {exc}") from exc

    options = PipelineOptions(
        pruning=not args.no_pruning, ordering=not args.no_ordering
    )
    tasks = list(enumerate(queries))
    if args.parallel > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(
            max_workers=args.parallel,
            initializer=_init_worker,
            initargs=(args.graph, modes, options, args.path_limit),
        ) as pool:
            results = list(pool.map(_worker_task, tasks))
    else:
        results = [
            _run_task(g, index, q, modes, options, args.path_limit)
            for index, q in tasks
        ]

    records: list[QueryRecord] = []
    try:
        for task_records, edge_texts in results:
            records.extend(task_records)
            for (index, mode), text in sorted(edge_texts.items()):
                (edges_dir / f"q{index:04d}.{mode}.edges").write_text(
                    text, encoding="utf-8"
                )
        report = build_report(args.graph, g, modes, len(queries), records)
        with open(out_dir / "records.tsv", "w", encoding="utf-8") as handle:
            write_records_tsv(records, handle)
        (out_dir / "report.json").write_text(
            report_to_json(report), encoding="utf-8"
        )
        if not args.no_figures:
            from .figures import render_figures  # defers matplotlib import

            render_figures(report, out_dir)
    except OSError as exc:
        raise CliError(EXIT_DATA, f"cannot write output: {exc}") from exc

    if report.oracle_mismatches:
        print(
            f"spg: error: {report.oracle_mismatches} of {len(queries)} queries "
            "diverged from the oracle",
            file=sys.stderr,
        )
        return EXIT_USAGE
    return EXIT_OK


def cmd_gen_queries(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    try:
        queries = sample_queries(g, _check_k(args.k), args.n, args.seed)
    except QuerySampleError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    text = write_query_file(queries, g)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CliError(EXIT_DATA, f"cannot write query file: {exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"spg: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
