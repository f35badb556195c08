"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Criterion 5 asserts its stated expected values verbatim; see the
repository notes for the analysis of its status.
"""

from __future__ import annotations

import json
import math
import time
from fractions import Fraction

import numpy as np

from conftest import complete_multigraph, cycle_multigraph
from propb import (
    EXCLUDED,
    INCONCLUSIVE,
    certify_4u,
    certify_5u,
    chromatic_number,
    cli,
    extremal_eigenvalues,
    generate_complete,
    generate_modular,
    hoffman_lovasz_bound,
    is_weak_2_colorable,
    rayleigh_quotient,
    serialize_hypergraph,
    sset_graph,
    underlying_graph,
)
from propb.suites import expectation_suite, lemma_suite, soundness_suite

EIG_TOL = 1e-9


def _report(num: int, description: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[criterion {num:2d}] {status} {description}"
    if detail:
        line += f" ({detail})"
    print(line)


def _run_certify(capsys, path: str) -> tuple[int, dict]:
    code = cli.main(["certify", path])
    out = capsys.readouterr().out
    return code, json.loads(out)["results"][0]


def test_criterion_1_tight_3_uniform_on_4(capsys, tmp_path):
    start = time.perf_counter()
    path = tmp_path / "k43.hg"
    path.write_text(serialize_hypergraph(generate_complete(4, 3)))
    code, cert = _run_certify(capsys, str(path))
    elapsed = time.perf_counter() - start

    ok = (
        code == 0
        and cert["verdict"] == INCONCLUSIVE
        and cert["tight"] is True
        and cert["quantities"]["avg_degree"] == 3.0
        and abs(cert["quantities"]["bound"] - 3.0) <= 1e-6
        and elapsed < 1.0
    )
    detail = f"bound={cert['quantities']['bound']:.9f}, tight={cert['tight']}, {elapsed:.3f}s"
    _report(1, "complete 3-uniform on 4 vertices is a tie (tight, inconclusive)", ok, detail)
    assert ok, detail


def test_criterion_2_excluded_3_uniform_on_5(capsys, tmp_path):
    start = time.perf_counter()
    path = tmp_path / "k53.hg"
    path.write_text(serialize_hypergraph(generate_complete(5, 3)))
    code, cert = _run_certify(capsys, str(path))
    oracle = is_weak_2_colorable(generate_complete(5, 3))
    elapsed = time.perf_counter() - start

    ok = (
        code == 10
        and cert["verdict"] == EXCLUDED
        and cert["quantities"]["avg_degree"] == 6.0
        and abs(cert["quantities"]["lambda_min"] + 3.0) <= 1e-9
        and abs(cert["quantities"]["bound"] - 4.5) <= 1e-6
        and oracle.answer is False
        and elapsed < 1.0
    )
    detail = (
        f"lambda_min={cert['quantities']['lambda_min']:.12f}, bound={cert['quantities']['bound']}, "
        f"oracle colorable={oracle.answer}, {elapsed:.3f}s"
    )
    _report(2, "complete 3-uniform on 5 vertices is excluded and truly uncolorable", ok, detail)
    assert ok, detail


def test_criterion_3_modular_18_vertex_instance(capsys, tmp_path):
    hypergraph = generate_modular(18, 4, 3, 0)
    start = time.perf_counter()

    lam_min = extremal_eigenvalues(underlying_graph(hypergraph).adjacency).lambda_min
    pair = sset_graph(hypergraph, 2)
    lam2_min = extremal_eigenvalues(pair.adjacency).lambda_min

    path = tmp_path / "mod18.hg"
    path.write_text(serialize_hypergraph(hypergraph))
    code, cert = _run_certify(capsys, str(path))

    oracle_start = time.perf_counter()
    oracle = is_weak_2_colorable(hypergraph)
    oracle_elapsed = time.perf_counter() - oracle_start
    elapsed = time.perf_counter() - start

    says_not_excluded = any("not excluded" in note for note in cert["notes"])
    ok = (
        hypergraph.average_degree() == Fraction(680, 3)
        and cert["exact"]["avg_degree"] == "680/3"
        and pair.n == 153
        and abs(lam_min + 45.0) <= 1e-6
        and abs(lam2_min + 39.7119) <= 1e-3
        and code == 0
        and cert["verdict"] == INCONCLUSIVE
        and abs(cert["quantities"]["bound"] - 315.034) <= 1e-2
        and cert["quantities"]["bound"] > cert["quantities"]["avg_degree"]
        and says_not_excluded
        and oracle.answer is False  # ground truth: genuinely not 2-colorable
        and oracle.exhaustive
        and oracle.work == 2**17
        and oracle_elapsed < 60.0
    )
    detail = (
        f"lambda_min={lam_min:.9f}, lambda2_min={lam2_min:.6f}, bound={cert['quantities']['bound']:.4f}, "
        f"verdict={cert['verdict']}, oracle colorable={oracle.answer} in {oracle_elapsed:.2f}s, total {elapsed:.2f}s"
    )
    _report(3, "18-vertex modular instance: certificate inconclusive, oracle settles it", ok, detail)
    assert ok, detail


def test_criterion_4_complete_4_uniform_threshold():
    start = time.perf_counter()
    certs = {n: certify_4u(generate_complete(n, 4)) for n in range(7, 13)}
    elapsed = time.perf_counter() - start

    ten = certs[10]
    ok = (
        all(certs[n].verdict == INCONCLUSIVE for n in range(7, 10))
        and all(certs[n].verdict == EXCLUDED for n in range(10, 13))
        and ten.quantities["avg_degree"] == 84.0
        and abs(ten.quantities["bound"] - 77.0) <= 1e-6
        and elapsed < 30.0
    )
    detail = f"verdicts 7..12: {[certs[n].verdict[:4] for n in range(7, 13)]}, bound(10)={ten.quantities['bound']:.6f}, {elapsed:.2f}s"
    _report(4, "complete 4-uniform threshold: first exclusion at n = 10", ok, detail)
    assert ok, detail


def test_criterion_5_complete_5_uniform_threshold():
    start = time.perf_counter()
    certs = {n: certify_5u(generate_complete(n, 5)) for n in range(6, 16)}
    elapsed = time.perf_counter() - start

    fifteen = certs[15]
    pair_vertices = sset_graph(generate_complete(15, 5), 2).n
    stated = (
        all(certs[n].verdict == INCONCLUSIVE for n in range(6, 15))
        and fifteen.verdict == EXCLUDED
        and fifteen.quantities["avg_degree"] == 1001.0
        and abs(fifteen.quantities["bound"] - 935.0) <= 0.5
        and pair_vertices == 105
        and elapsed < 10.0
    )
    first_excluded = next((n for n in range(6, 16) if certs[n].verdict == EXCLUDED), None)
    detail = (
        f"stated: exclusion at n=15 with bound 935; observed: first exclusion in 6..15 = {first_excluded}, "
        f"bound(15)={fifteen.quantities['bound']:.2f} vs avg degree {fifteen.quantities['avg_degree']:.0f}, "
        f"pair vertices={pair_vertices}, {elapsed:.2f}s"
    )
    _report(5, "complete 5-uniform threshold: first exclusion at n = 15 as stated", stated, detail)
    assert stated, detail


def test_criterion_6_expectation_identity():
    start = time.perf_counter()
    report = expectation_suite(seed=20260806, count=50, max_n=8, ks=(2, 3, 4))
    elapsed = time.perf_counter() - start

    ok = report.passed and report.checks[0].cases == 50 and elapsed < 60.0
    detail = f"{report.checks[0].cases} cases, failures={len(report.checks[0].failures)}, {elapsed:.2f}s"
    _report(6, "root-assignment expectation equals 2M - 2B/(k-1) exactly", ok, detail)
    assert ok, detail


def test_criterion_7_conflict_bound_sandwich():
    start = time.perf_counter()
    report = lemma_suite(seed=20260807, count=50, sizes=(3, 10), ks=(2, 3), colorings_per_graph=10)
    elapsed = time.perf_counter() - start

    by_name = {check.name: check for check in report.checks}
    sandwich = by_name["min-mono-fraction-vs-bound"]
    bridging = by_name["expectation-between-n-lambda"]
    ok = (
        report.passed
        and sandwich.cases == 100  # 50 graphs x k in {2, 3}
        and bridging.cases == 500  # 50 graphs x 10 colorings
        and elapsed < 300.0
    )
    detail = f"sandwich {sandwich.cases} cases, bridging {bridging.cases} cases, all pass={report.passed}, {elapsed:.2f}s"
    _report(7, "exhaustive minimum conflict fraction respects the spectral bound", ok, detail)
    assert ok, detail


def test_criterion_8_certifier_soundness():
    start = time.perf_counter()
    report = soundness_suite(seed=20260808, count=200, sizes=(5, 12))
    elapsed = time.perf_counter() - start

    ok = report.passed and report.checks[0].cases == 200 and elapsed < 600.0
    detail = (
        f"200 instances, excluded={report.meta['excludedInstances']}, "
        f"colorable={report.meta['colorableInstances']}, failures={len(report.checks[0].failures)}, {elapsed:.1f}s"
    )
    _report(8, "no instance is both excluded and exhaustively 2-colorable", ok, detail)
    assert ok, detail


def test_criterion_9_eigenvalue_ratio_bound(petersen):
    start = time.perf_counter()
    complete_ok = all(
        abs(hoffman_lovasz_bound(complete_multigraph(n).adjacency.astype(float)) - n) <= EIG_TOL
        for n in range(2, 9)
    )
    petersen_w = petersen.adjacency.astype(float)
    petersen_bound = hoffman_lovasz_bound(petersen_w)
    chi = chromatic_number(petersen).answer
    scaling_ok = all(
        abs(hoffman_lovasz_bound(c * petersen_w) - petersen_bound) <= 1e-9
        for c in (1e-6, 0.5, 3.0, 1e6)
    )
    elapsed = time.perf_counter() - start

    ok = (
        complete_ok
        and abs(petersen_bound - 2.5) <= 1e-9
        and math.ceil(petersen_bound) <= chi == 3
        and scaling_ok
        and elapsed < 5.0
    )
    detail = f"complete graphs exact to {EIG_TOL}, petersen bound={petersen_bound:.9f}, chi={chi}, {elapsed:.2f}s"
    _report(9, "eigenvalue-ratio chromatic bound: values, oracle, scaling invariance", ok, detail)
    assert ok, detail


def test_criterion_10_eigensolver_contract(petersen):
    start = time.perf_counter()
    rng = np.random.default_rng(20260810)
    graphs: dict[str, np.ndarray] = {f"K{n}": complete_multigraph(n).adjacency for n in range(2, 21)}
    graphs.update({f"C{n}": cycle_multigraph(n).adjacency for n in range(3, 21)})
    graphs["petersen"] = petersen.adjacency

    closed_ok = True
    for n in range(2, 21):
        s = extremal_eigenvalues(graphs[f"K{n}"])
        closed_ok &= abs(s.lambda_min + 1.0) <= EIG_TOL and abs(s.lambda_max - (n - 1)) <= EIG_TOL
    for n in range(3, 21):
        s = extremal_eigenvalues(graphs[f"C{n}"])
        values = [2.0 * math.cos(2.0 * math.pi * j / n) for j in range(n)]
        closed_ok &= abs(s.lambda_min - min(values)) <= EIG_TOL
        closed_ok &= abs(s.lambda_max - max(values)) <= EIG_TOL
    s = extremal_eigenvalues(graphs["petersen"])
    closed_ok &= abs(s.lambda_min + 2.0) <= EIG_TOL and abs(s.lambda_max - 3.0) <= EIG_TOL

    trace_ok = True
    for _ in range(15):
        n = int(rng.integers(2, 13))
        m = rng.integers(0, 4, size=(n, n))
        m = np.triu(m, 1)
        m = m + m.T
        trace_ok &= abs(np.linalg.eigvalsh(m.astype(float)).sum()) <= 1e-8

    sandwich_ok = True
    for adjacency in graphs.values():
        s = extremal_eigenvalues(adjacency)
        n = adjacency.shape[0]
        vectors = rng.standard_normal((10_000, n))
        for x in vectors:
            q = rayleigh_quotient(adjacency, x)
            if not (s.lambda_min - EIG_TOL <= q <= s.lambda_max + EIG_TOL):
                sandwich_ok = False
                break
        if not sandwich_ok:
            break
    elapsed = time.perf_counter() - start

    ok = closed_ok and trace_ok and sandwich_ok
    detail = (
        f"closed forms={closed_ok}, trace-zero={trace_ok}, "
        f"{len(graphs)} graphs x 10^4 Rayleigh quotients sandwiched={sandwich_ok}, {elapsed:.1f}s"
    )
    _report(10, "eigensolver matches closed forms; Rayleigh quotients stay sandwiched", ok, detail)
    assert ok, detail
