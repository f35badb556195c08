"""Randomized verification suites: seeded corpora pitting the spectral bounds
against the exhaustive oracles.

Each suite returns a report with one entry per property, counting cases and
collecting counterexample dumps (which should stay empty).  All randomness
flows through one seeded generator, so a report is reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .bounds import certify, lemma_chromatic_bound, min_mono_fraction_bound
from .hypergraphs import Coloring, Hypergraph
from .oracle import exact_rho_expectation, is_weak_2_colorable, min_mono_edges
from .projections import Multigraph
from .spectra import extremal_eigenvalues

__all__ = [
    "PropertyCheck",
    "SuiteReport",
    "random_multigraph",
    "random_coloring",
    "random_uniform_hypergraph",
    "expectation_suite",
    "lemma_suite",
    "soundness_suite",
    "run_suite",
    "SUITE_NAMES",
]


@dataclass
class PropertyCheck:
    name: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, dump: dict) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(dump)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: list[PropertyCheck]
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [check.to_json_dict() for check in self.checks],
            "meta": dict(sorted(self.meta.items())),
        }


def random_multigraph(
    rng: random.Random, n: int, density: float = 0.5, max_multiplicity: int = 3
) -> Multigraph:
    """Random symmetric integer adjacency with at least one edge."""
    adj = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                adj[u, v] = adj[v, u] = rng.randint(1, max_multiplicity)
    if n >= 2 and not adj.any():
        u, v = rng.sample(range(n), 2)
        adj[u, v] = adj[v, u] = rng.randint(1, max_multiplicity)
    return Multigraph(n=n, adjacency=adj)


def random_coloring(rng: random.Random, n: int, k: int) -> Coloring:
    return Coloring(colors=tuple(rng.randrange(k) for _ in range(n)), k=k)


def random_uniform_hypergraph(
    rng: random.Random, n: int, r: int, max_edges: int | None = None
) -> Hypergraph:
    """Random r-uniform hypergraph, duplicates allowed, at least one edge.

    Edge counts range up to 1.5x the number of distinct r-subsets so that
    dense (and therefore sometimes excludable) instances occur.
    """
    import itertools

    pool = list(itertools.combinations(range(n), r))
    high = max_edges if max_edges is not None else comb(n, r) + comb(n, r) // 2
    m = rng.randint(1, max(1, high))
    edges = tuple(sorted(rng.choices(pool, k=m)))
    return Hypergraph(n=n, edges=edges)


def _mono_fraction(graph: Multigraph, answer: int) -> Fraction:
    return Fraction(int(answer), graph.total_multiplicity)


def expectation_suite(
    seed: int, count: int = 50, max_n: int = 8, ks: tuple[int, ...] = (2, 3, 4)
) -> SuiteReport:
    """Root-assignment expectation equals 2M - 2B/(k-1) on random graphs.

    M and B are recounted here by a direct edge scan, independent of the
    oracle's bookkeeping.
    """
    rng = random.Random(seed)
    identity = PropertyCheck(name="expectation-identity")
    for _ in range(count):
        n = rng.randint(2, max_n)
        graph = random_multigraph(rng, n, density=rng.uniform(0.3, 0.9))
        k = rng.choice(ks)
        coloring = random_coloring(rng, n, k)

        mono = bichromatic = 0
        for u, v, mult in graph.edge_list():
            if coloring.colors[u] == coloring.colors[v]:
                mono += mult
            else:
                bichromatic += mult
        expected = Fraction(2 * mono) - Fraction(2 * bichromatic, k - 1)

        actual = exact_rho_expectation(graph, coloring)
        ok = actual == expected if isinstance(actual, Fraction) else abs(actual - float(expected)) <= 1e-12
        identity.record(
            ok,
            {"n": n, "k": k, "colors": list(coloring.colors), "actual": str(actual), "expected": str(expected)},
        )
    return SuiteReport(suite="expectation", seed=seed, checks=[identity])


def lemma_suite(
    seed: int,
    count: int = 50,
    sizes: tuple[int, int] = (4, 10),
    ks: tuple[int, ...] = (2, 3),
    colorings_per_graph: int = 10,
) -> SuiteReport:
    """Conflict-bound sandwich on random multigraphs.

    For every graph and k: the exhaustive minimum monochromatic fraction must
    not undercut the spectral lower bound; plugging that bound back into the
    chromatic form must not exceed k; and the expectation of x*Ax stays within
    n times the extremal eigenvalues for random colorings.
    """
    rng = random.Random(seed)
    sandwich = PropertyCheck(name="min-mono-fraction-vs-bound")
    inverse = PropertyCheck(name="chromatic-form-inverse")
    bridging = PropertyCheck(name="expectation-between-n-lambda")
    lo, hi = sizes
    for _ in range(count):
        n = rng.randint(max(2, lo), hi)
        graph = random_multigraph(rng, n, density=rng.uniform(0.3, 0.9))
        summary = extremal_eigenvalues(graph.adjacency)
        for k in ks:
            bound = min_mono_fraction_bound(graph, k)
            exact = min_mono_edges(graph, k)
            fraction = _mono_fraction(graph, exact.answer)
            sandwich.record(
                float(fraction) >= bound - 1e-9,
                {"n": n, "k": k, "bound": bound, "exact_fraction": str(fraction)},
            )
            back = lemma_chromatic_bound(graph, bound)
            inverse.record(
                back <= k + 1e-9,
                {"n": n, "k": k, "bound": bound, "recovered_k": back},
            )
        for _ in range(colorings_per_graph):
            k = rng.choice(ks)
            coloring = random_coloring(rng, n, k)
            value = exact_rho_expectation(graph, coloring)
            value_f = float(value)
            ok = (
                n * summary.lambda_min - 1e-9 <= value_f <= n * summary.lambda_max + 1e-9
            )
            bridging.record(
                ok,
                {
                    "n": n,
                    "k": k,
                    "value": value_f,
                    "n_lambda_min": n * summary.lambda_min,
                    "n_lambda_max": n * summary.lambda_max,
                },
            )
    return SuiteReport(suite="lemma", seed=seed, checks=[sandwich, inverse, bridging])


def soundness_suite(
    seed: int, count: int = 200, sizes: tuple[int, int] = (5, 12)
) -> SuiteReport:
    """EXCLUDED verdicts must never contradict the exhaustive 2-coloring search."""
    rng = random.Random(seed)
    sound = PropertyCheck(name="excluded-implies-uncolorable")
    lo, hi = sizes
    excluded_count = 0
    colorable_count = 0
    for _ in range(count):
        r = rng.choice((3, 4, 5))
        n = rng.randint(max(lo, r), max(hi, r))
        hypergraph = random_uniform_hypergraph(rng, n, r)
        certificate = certify(hypergraph)
        truth = is_weak_2_colorable(hypergraph)
        if truth.answer:
            colorable_count += 1
        if certificate.excluded:
            excluded_count += 1
            sound.record(
                not truth.answer,
                {
                    "n": n,
                    "r": r,
                    "edges": hypergraph.num_edges,
                    "bound": certificate.quantities["bound"],
                    "avg_degree": certificate.quantities["avg_degree"],
                    "oracle_colorable": bool(truth.answer),
                },
            )
        else:
            sound.record(True, {})
    report = SuiteReport(suite="soundness", seed=seed, checks=[sound])
    report.meta["excludedInstances"] = excluded_count
    report.meta["colorableInstances"] = colorable_count
    return report


SUITE_NAMES = {
    "expectation": expectation_suite,
    "lemma": lemma_suite,
    "soundness": soundness_suite,
}


def run_suite(
    name: str, seed: int, count: int | None = None, sizes: tuple[int, int] | None = None
) -> SuiteReport:
    """Dispatch a suite by name with optional overrides."""
    runner = SUITE_NAMES.get(name)
    if runner is None:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITE_NAMES)}")
    kwargs: dict = {"seed": seed}
    if count is not None:
        kwargs["count"] = count
    if sizes is not None and name in ("lemma", "soundness"):
        kwargs["sizes"] = sizes
    return runner(**kwargs)
