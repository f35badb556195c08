"""Batch command-line front end.

Subcommands: ``gen`` (write instance files), ``certify`` (exclusion
certificates), ``spectrum`` (projection eigenvalues), ``oracle`` (exhaustive
ground truth), ``verify`` (randomized property suites).  Every command prints
one machine-parseable JSON report to stdout and keeps human diagnostics on
stderr.  Exit codes: 0 for success / INCONCLUSIVE, 10 when a certificate
verdict is EXCLUDED, 1 when a verify suite fails, 2 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bounds import DEFAULT_VERDICT_TOL, certify
from .errors import PropBError
from .hypergraphs import (
    Hypergraph,
    content_hash,
    generate_complete,
    generate_modular,
    parse_hypergraph,
    serialize_hypergraph,
)
from .oracle import (
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_VERTEX_CAP,
    chromatic_number,
    is_weak_2_colorable,
    min_mono_edges,
)
from .projections import (
    DEFAULT_SSET_CAP,
    format_adjacency_matrix,
    format_edge_list,
    graph_from_two_uniform,
    sset_graph,
    underlying_graph,
)
from .spectra import DEFAULT_EIG_TOL, extremal_eigenvalues
from .suites import run_suite

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_ERROR = 2
EXIT_EXCLUDED = 10

SPEC_VERSION = 1


def _make_report(command: str, results: list, input_hash: str | None, seed: int | None, timing: dict) -> dict:
    return {
        "specVersion": SPEC_VERSION,
        "command": command,
        "inputHash": input_hash,
        "seed": seed,
        "results": results,
        "timingMs": timing,
    }


def _emit(report: dict, json_out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if json_out:
        Path(json_out).write_text(text, encoding="utf-8")


def _load_hypergraph(path: str) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(encoding="utf-8"))


def _target_graph(hypergraph: Hypergraph, target: str, cap: int):
    if target == "underlying":
        return underlying_graph(hypergraph)
    if target == "sset2":
        return sset_graph(hypergraph, 2, cap=cap)
    return graph_from_two_uniform(hypergraph)


def _cmd_gen(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.kind == "complete":
        hypergraph = generate_complete(args.n, args.r)
    else:
        hypergraph = generate_modular(args.n, args.r, args.modulus, args.target_residue)
    Path(args.output).write_text(serialize_hypergraph(hypergraph), encoding="utf-8")
    dbar = hypergraph.average_degree() if hypergraph.n else 0
    result = {
        "type": "generated",
        "path": args.output,
        "n": hypergraph.n,
        "edges": hypergraph.num_edges,
        "uniformity": hypergraph.uniformity() or 0,
        "avgDegree": float(dbar),
        "avgDegreeExact": str(dbar),
    }
    timing = {"totalMs": (time.perf_counter() - start) * 1000.0}
    print(
        f"wrote {args.output}: n={hypergraph.n} edges={hypergraph.num_edges} avg degree={dbar}",
        file=sys.stderr,
    )
    _emit(_make_report("gen", [result], content_hash(hypergraph), None, timing), args.json_out)
    return EXIT_OK


def _cmd_certify(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    hypergraph = _load_hypergraph(args.file)
    loaded = time.perf_counter()
    certificate = certify(
        hypergraph,
        theorem=args.theorem,
        tol=args.tol,
        eig_tol=args.eig_tol,
        sset_cap=args.cap,
    )
    timing = {
        "loadMs": (loaded - start) * 1000.0,
        "computeMs": (time.perf_counter() - loaded) * 1000.0,
        "totalMs": (time.perf_counter() - start) * 1000.0,
    }
    report = _make_report(
        "certify", [{"type": "certificate", **certificate.to_json_dict()}], certificate.input_hash, None, timing
    )
    _emit(report, args.json_out)
    if args.figure:
        from .figures import save_certificate_figure

        save_certificate_figure(certificate, args.figure)
    print(f"{certificate.theorem}: {certificate.verdict}", file=sys.stderr)
    return EXIT_EXCLUDED if certificate.excluded else EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    hypergraph = _load_hypergraph(args.file)
    graph = _target_graph(hypergraph, args.target, args.cap)
    summary = extremal_eigenvalues(graph.adjacency, tol=args.eig_tol)
    timing = {"totalMs": (time.perf_counter() - start) * 1000.0}
    result = {"type": "spectralSummary", "target": args.target, **summary.to_json_dict()}
    _emit(_make_report("spectrum", [result], content_hash(hypergraph), None, timing), args.json_out)
    if args.export:
        if not args.export_out:
            raise PropBError("--export needs --export-out PATH")
        text = format_adjacency_matrix(graph) if args.export == "matrix" else format_edge_list(graph)
        Path(args.export_out).write_text(text, encoding="utf-8")
    if args.figure:
        from .figures import save_spectrum_figure

        save_spectrum_figure(graph.adjacency, summary, args.figure)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    hypergraph = _load_hypergraph(args.file)
    if args.query == "2color":
        result = is_weak_2_colorable(hypergraph, cap=args.cap)
        extra = {"query": "2color"}
    else:
        graph = _target_graph(hypergraph, args.graph, DEFAULT_SSET_CAP)
        if args.query == "minmono":
            result = min_mono_edges(graph, args.k, budget=args.budget)
            extra = {"query": "minmono", "k": args.k, "graph": args.graph}
        else:
            result = chromatic_number(graph, cap=args.cap)
            extra = {"query": "chromatic", "graph": args.graph}
    timing = {"totalMs": (time.perf_counter() - start) * 1000.0}
    payload = {"type": "oracleResult", **extra, **result.to_json_dict()}
    _emit(_make_report("oracle", [payload], content_hash(hypergraph), None, timing), args.json_out)
    return EXIT_OK


def _parse_sizes(spec: str | None) -> tuple[int, int] | None:
    if spec is None:
        return None
    try:
        lo_text, hi_text = spec.split("..", maxsplit=1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise PropBError(f"--sizes expects 'LO..HI', got {spec!r}") from None
    if lo > hi:
        raise PropBError(f"--sizes range is empty: {spec!r}")
    return lo, hi


def _cmd_verify(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = run_suite(args.suite, seed=args.seed, count=args.count, sizes=_parse_sizes(args.sizes))
    timing = {"totalMs": (time.perf_counter() - start) * 1000.0}
    payload = {"type": "suiteReport", **report.to_json_dict()}
    _emit(_make_report("verify", [payload], None, args.seed, timing), args.json_out)
    if args.figure:
        from .figures import save_suite_figure

        save_suite_figure(report, args.figure)
    for check in report.checks:
        status = "pass" if check.passed else f"FAIL ({len(check.failures)} counterexamples)"
        print(f"{report.suite}/{check.name}: {check.cases} cases, {status}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_SUITE_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propb",
        description="Spectral exclusion certificates for weak 2-colorability of uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    gen_complete = gen_sub.add_parser("complete", help="all r-subsets of n vertices")
    gen_complete.add_argument("n", type=int)
    gen_complete.add_argument("r", type=int)
    gen_modular = gen_sub.add_parser("modular", help="r-subsets with 1-based label sum = t mod m")
    gen_modular.add_argument("n", type=int)
    gen_modular.add_argument("r", type=int)
    gen_modular.add_argument("modulus", type=int)
    gen_modular.add_argument("target_residue", type=int)
    for p in (gen_complete, gen_modular):
        p.add_argument("-o", "--output", required=True, help="path for the hypergraph file")
        p.add_argument("--json-out", help="also write the JSON report here")

    certify_p = sub.add_parser("certify", help="evaluate an exclusion certificate")
    certify_p.add_argument("file", help="hypergraph file")
    certify_p.add_argument("--theorem", choices=("auto", "3u", "4u", "5u"), default="auto")
    certify_p.add_argument("--tol", type=float, default=DEFAULT_VERDICT_TOL, help="verdict margin tolerance")
    certify_p.add_argument("--eig-tol", type=float, default=DEFAULT_EIG_TOL, help="eigensolver tolerance")
    certify_p.add_argument("--cap", type=int, default=DEFAULT_SSET_CAP, help="subset-graph vertex cap")
    certify_p.add_argument("--json-out", help="also write the JSON report here")
    certify_p.add_argument("--figure", help="render the certificate comparison to this image file")

    spectrum_p = sub.add_parser("spectrum", help="extremal eigenvalues of a projection")
    spectrum_p.add_argument("file", help="hypergraph file")
    spectrum_p.add_argument(
        "--target",
        choices=("underlying", "sset2", "graph"),
        default="underlying",
        help="underlying = pairwise projection, sset2 = 2-subset projection, graph = 2-uniform input as-is",
    )
    spectrum_p.add_argument("--eig-tol", type=float, default=DEFAULT_EIG_TOL)
    spectrum_p.add_argument("--cap", type=int, default=DEFAULT_SSET_CAP, help="subset-graph vertex cap")
    spectrum_p.add_argument("--export", choices=("matrix", "edges"), help="write the projected multigraph as text")
    spectrum_p.add_argument("--export-out", help="path for --export output")
    spectrum_p.add_argument("--json-out", help="also write the JSON report here")
    spectrum_p.add_argument("--figure", help="render the spectrum to this image file")

    oracle_p = sub.add_parser("oracle", help="exhaustive ground-truth queries")
    oracle_p.add_argument("file", help="hypergraph file")
    oracle_p.add_argument("--query", choices=("2color", "minmono", "chromatic"), required=True)
    oracle_p.add_argument("--k", type=int, default=2, help="color count for minmono")
    oracle_p.add_argument(
        "--graph",
        choices=("underlying", "sset2", "graph"),
        default="underlying",
        help="which projection minmono/chromatic run on",
    )
    oracle_p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="vertex cap for searches")
    oracle_p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET, help="k^n budget for minmono")
    oracle_p.add_argument("--json-out", help="also write the JSON report here")

    verify_p = sub.add_parser("verify", help="run a randomized property suite")
    verify_p.add_argument("suite", choices=("expectation", "lemma", "soundness"))
    verify_p.add_argument("--seed", type=int, default=0)
    verify_p.add_argument("--count", type=int, default=None, help="instances to draw (suite default if omitted)")
    verify_p.add_argument("--sizes", help="vertex-count range LO..HI for lemma/soundness")
    verify_p.add_argument("--json-out", help="also write the JSON report here")
    verify_p.add_argument("--figure", help="render the suite summary to this image file")

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "certify": _cmd_certify,
    "spectrum": _cmd_spectrum,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (PropBError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
