"""Shared fixtures and independent brute-force helpers for the test suite.

The helpers here deliberately avoid the library's own search code: they
enumerate with itertools and count by hand, so they can serve as oracles for
the package's answers.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from propb import Hypergraph, Multigraph, generate_complete, sset_graph

settings.register_profile(
    "suite", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


def complete_multigraph(n: int, multiplicity: int = 1) -> Multigraph:
    adj = multiplicity * (np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))
    return Multigraph(n=n, adjacency=adj)


def cycle_multigraph(n: int) -> Multigraph:
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        adj[i, (i + 1) % n] += 1
        adj[(i + 1) % n, i] += 1
    return Multigraph(n=n, adjacency=adj)


def path_multigraph(n: int) -> Multigraph:
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        adj[i, i + 1] = adj[i + 1, i] = 1
    return Multigraph(n=n, adjacency=adj)


@pytest.fixture(scope="session")
def petersen() -> Multigraph:
    # Disjointness graph on the 2-subsets of a 5-set.
    return sset_graph(generate_complete(5, 4), 2)


def mono_multiplicity(graph: Multigraph, colors) -> int:
    """Monochromatic edge multiplicity of a coloring, counted by hand."""
    total = 0
    n = graph.n
    for u in range(n):
        for v in range(u + 1, n):
            if colors[u] == colors[v]:
                total += int(graph.adjacency[u, v])
    return total


def brute_min_mono(graph: Multigraph, k: int) -> tuple[int, tuple[int, ...]]:
    """Exact minimum monochromatic multiplicity over ALL k^n colorings."""
    best = None
    best_coloring = None
    for colors in itertools.product(range(k), repeat=graph.n):
        value = mono_multiplicity(graph, colors)
        if best is None or value < best:
            best, best_coloring = value, colors
    return best, best_coloring


def brute_weak_2_colorable(hypergraph: Hypergraph) -> tuple[bool, tuple[int, ...] | None]:
    """Exhaustive weak-2-colorability over ALL 2^n colorings, lex order."""
    for colors in itertools.product((0, 1), repeat=hypergraph.n):
        if all(len({colors[v] for v in e}) > 1 for e in hypergraph.edges):
            return True, colors
    return False, None


def brute_lex_min_proper(graph: Multigraph, k: int) -> tuple[int, ...] | None:
    """Lexicographically smallest proper k-coloring by full enumeration."""
    for colors in itertools.product(range(k), repeat=graph.n):
        if all(
            colors[u] != colors[v]
            for u in range(graph.n)
            for v in range(u + 1, graph.n)
            if graph.adjacency[u, v] > 0
        ):
            return colors
    return None
