"""Exhaustive ground truth: colorability, minimum conflicts, and the
root-of-unity expectation that underlies the spectral bounds.

Everything here is deliberately independent of the bound machinery: searches
enumerate, expectations average over all color-to-root bijections, and exact
answers use rational arithmetic.  Caps and budgets keep the exponential
searches at desk scale; exceeding one raises instead of sampling silently.

Coloring enumeration order: a coloring is read as the digit string
``c_1 c_2 ... c_{n-1}`` (vertex 0 is pinned to color 0, which loses nothing
since every counted property is invariant under color permutation).  Indices
therefore ascend in lexicographic coloring order, so "first hit" witnesses
are the lexicographically smallest ones.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetError, SizeCapError
from .hypergraphs import Coloring, Hypergraph
from .projections import Multigraph

__all__ = [
    "OracleResult",
    "RhoEstimate",
    "is_weak_2_colorable",
    "is_k_colorable",
    "chromatic_number",
    "min_mono_edges",
    "exact_rho_expectation",
    "monte_carlo_rho",
    "DEFAULT_VERTEX_CAP",
    "DEFAULT_SEARCH_BUDGET",
    "RATIONAL_COS_K",
]

DEFAULT_VERTEX_CAP = 24
DEFAULT_SEARCH_BUDGET = 1 << 26
_CHUNK = 1 << 18

# Orders k whose k-th roots of unity have rational real parts, keyed to
# cos(2*pi*d/k) by residue d; for these the expectation is computed exactly.
RATIONAL_COS_K = {
    1: (Fraction(1),),
    2: (Fraction(1), Fraction(-1)),
    3: (Fraction(1), Fraction(-1, 2), Fraction(-1, 2)),
    4: (Fraction(1), Fraction(0), Fraction(-1), Fraction(0)),
    6: (Fraction(1), Fraction(1, 2), Fraction(-1, 2), Fraction(-1), Fraction(-1, 2), Fraction(1, 2)),
}


@dataclass(frozen=True)
class OracleResult:
    """Outcome of one exhaustive query."""

    answer: bool | int | Fraction
    witness: Coloring | None
    exhaustive: bool
    work: int

    def to_json_dict(self) -> dict:
        answer = self.answer
        if isinstance(answer, Fraction):
            answer = str(answer)
        return {
            "answer": answer,
            "witness": list(self.witness.colors) if self.witness is not None else None,
            "witnessColors": self.witness.k if self.witness is not None else None,
            "exhaustive": self.exhaustive,
            "work": self.work,
        }


@dataclass(frozen=True)
class RhoEstimate:
    """Monte-Carlo estimate of the expectation over random root assignments."""

    mean: float
    std_error: float
    trials: int
    seed: int

    def to_json_dict(self) -> dict:
        return {"mean": self.mean, "stdError": self.std_error, "trials": self.trials, "seed": self.seed}


def _decode_coloring(index: int, n: int, k: int) -> Coloring:
    colors = [0] * n
    for v in range(1, n):
        colors[v] = (index // k ** (n - 1 - v)) % k
    return Coloring(colors=tuple(colors), k=k)


def is_weak_2_colorable(hypergraph: Hypergraph, cap: int = DEFAULT_VERTEX_CAP) -> OracleResult:
    """Search all 2^(n-1) essentially distinct 2-colorings for a proper one.

    Proper means no hyperedge is monochromatic.  Returns the lexicographically
    smallest proper coloring as witness when one exists.
    """
    n = hypergraph.n
    if n > cap:
        raise SizeCapError(f"2-coloring search capped at {cap} vertices, got {n}")
    if n == 0:
        return OracleResult(answer=True, witness=Coloring((), 2), exhaustive=True, work=1)

    # vertex v <-> bit (n-1-v), so integer order on masks = lex order on colorings
    edge_masks = [np.uint32(sum(1 << (n - 1 - v) for v in e)) for e in hypergraph.edges]
    space = 1 << (n - 1)
    work = 0
    for lo in range(0, space, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, space), dtype=np.uint32)
        alive = np.ones(masks.size, dtype=bool)
        for count, em in enumerate(edge_masks):
            hit = masks & em
            alive &= hit != 0
            alive &= hit != em
            if count % 64 == 63 and not alive.any():
                break
        work += masks.size
        if alive.any():
            first = lo + int(np.argmax(alive))
            return OracleResult(
                answer=True, witness=_decode_coloring(first, n, 2), exhaustive=True, work=work
            )
    return OracleResult(answer=False, witness=None, exhaustive=True, work=space)


def is_k_colorable(graph: Multigraph, k: int, cap: int = DEFAULT_VERTEX_CAP) -> OracleResult:
    """Backtracking proper-coloring search; edge multiplicities are irrelevant.

    The witness is the lexicographically smallest proper coloring (depth-first
    with ascending colors finds exactly that).
    """
    n = graph.n
    if n > cap:
        raise SizeCapError(f"coloring search capped at {cap} vertices, got {n}")
    if k < 0:
        raise ValueError(f"color count must be nonnegative, got {k}")
    if n == 0:
        return OracleResult(answer=True, witness=Coloring((), max(k, 1)), exhaustive=True, work=1)
    if k == 0:
        return OracleResult(answer=False, witness=None, exhaustive=True, work=1)

    prior = [[u for u in range(v) if graph.adjacency[u, v] > 0] for v in range(n)]
    colors = [0] * n
    work = 0

    def descend(v: int, used: int) -> bool:
        nonlocal work
        if v == n:
            return True
        taken = {colors[u] for u in prior[v]}
        # Colors beyond one past the highest used so far are symmetric copies;
        # skipping them keeps the first solution lexicographically smallest.
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colors[v] = c
            work += 1
            if descend(v + 1, max(used, c + 1)):
                return True
        return False

    if descend(0, 0):
        return OracleResult(answer=True, witness=Coloring(tuple(colors), k), exhaustive=True, work=work)
    return OracleResult(answer=False, witness=None, exhaustive=True, work=work)


def chromatic_number(graph: Multigraph, cap: int = DEFAULT_VERTEX_CAP) -> OracleResult:
    """Exact chromatic number by increasing-k search."""
    if graph.n == 0:
        return OracleResult(answer=0, witness=Coloring((), 1), exhaustive=True, work=1)
    total_work = 0
    for k in range(1, graph.n + 1):
        result = is_k_colorable(graph, k, cap=cap)
        total_work += result.work
        if result.answer:
            return OracleResult(answer=k, witness=result.witness, exhaustive=True, work=total_work)
    raise AssertionError("a graph on n vertices is always n-colorable")


def _digits(indices: np.ndarray, k: int, n: int, v: int) -> np.ndarray | int:
    if v == 0:
        return 0
    if k == 2:
        return (indices >> (n - 1 - v)) & 1
    return (indices // k ** (n - 1 - v)) % k


def min_mono_edges(
    graph: Multigraph, k: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> OracleResult:
    """Exact minimum, over all k-colorings, of monochromatic edge multiplicity.

    Scans k^(n-1) colorings in lexicographic order (vertex 0 pinned), so the
    witness is the lexicographically smallest minimizer.
    """
    if k < 1:
        raise ValueError(f"color count must be positive, got {k}")
    n = graph.n
    edges = graph.edge_list()
    if n == 0:
        return OracleResult(answer=0, witness=Coloring((), k), exhaustive=True, work=1)
    if k == 1:
        witness = Coloring(tuple([0] * n), 1)
        return OracleResult(answer=graph.total_multiplicity, witness=witness, exhaustive=True, work=1)
    if k**n > budget:
        raise BudgetError(f"k^n = {k}^{n} exceeds the search budget {budget}")

    space = k ** (n - 1)
    best: int | None = None
    best_index = 0
    work = 0
    for lo in range(0, space, _CHUNK):
        indices = np.arange(lo, min(lo + _CHUNK, space), dtype=np.int64)
        counts = np.zeros(indices.size, dtype=np.int64)
        digit_cache: dict[int, np.ndarray | int] = {}
        for u, v, mult in edges:
            cu = digit_cache.setdefault(u, _digits(indices, k, n, u))
            cv = digit_cache.setdefault(v, _digits(indices, k, n, v))
            counts += mult * (cu == cv)
        work += indices.size
        chunk_min = int(counts.min())
        if best is None or chunk_min < best:
            best = chunk_min
            best_index = lo + int(np.argmin(counts))
        if best == 0:
            break  # zero is a hard floor, and the first zero is the lex-min one
    assert best is not None
    return OracleResult(
        answer=best, witness=_decode_coloring(best_index, n, k), exhaustive=True, work=work
    )


def _color_pair_weights(graph: Multigraph, coloring: Coloring) -> tuple[list[list[int]], int, int]:
    """Edge multiplicity between color classes; returns (weights, mono, bichromatic)."""
    if coloring.n != graph.n:
        raise ValueError(f"coloring covers {coloring.n} vertices, graph has {graph.n}")
    k = coloring.k
    weights = [[0] * k for _ in range(k)]
    for u, v, mult in graph.edge_list():
        a, b = sorted((coloring.colors[u], coloring.colors[v]))
        weights[a][b] += mult
    mono = sum(weights[a][a] for a in range(k))
    bichromatic = sum(weights[a][b] for a in range(k) for b in range(a + 1, k))
    return weights, mono, bichromatic


def _quadratic_form(weights: list[list[int]], k: int, perm: tuple[int, ...], cos_table) -> object:
    """x* A x for the coloring vector with x_v = root(perm[color(v)])."""
    total = 0
    for a in range(k):
        for b in range(a, k):
            w = weights[a][b]
            if w:
                total += 2 * w * cos_table[(perm[a] - perm[b]) % k]
    return total


def exact_rho_expectation(graph: Multigraph, coloring: Coloring) -> Fraction | float:
    """Average of x* A x over ALL bijections from colors to k-th roots of unity.

    Here x_v is the root assigned to vertex v's color, so x*x = n.  For k with
    rational root real parts (1, 2, 3, 4, 6) the average is an exact Fraction;
    other k fall back to floats.  Equals 2M - 2B/(k-1) where M and B count
    monochromatic and bichromatic edges with multiplicity.
    """
    k = coloring.k
    if k > 8:
        raise BudgetError(f"k! enumeration capped at k = 8, got {k}")
    weights, mono, _ = _color_pair_weights(graph, coloring)
    if k == 1:
        return Fraction(2 * mono)

    if k in RATIONAL_COS_K:
        cos_table: tuple = RATIONAL_COS_K[k]
        total: Fraction | float = Fraction(0)
    else:
        cos_table = tuple(math.cos(2.0 * math.pi * d / k) for d in range(k))
        total = 0.0
    count = 0
    for perm in itertools.permutations(range(k)):
        total += _quadratic_form(weights, k, perm, cos_table)
        count += 1
    if isinstance(total, Fraction):
        return total / count
    return total / count


def monte_carlo_rho(
    graph: Multigraph, coloring: Coloring, trials: int, seed: int
) -> RhoEstimate:
    """Sample mean and standard error of x* A x over random root bijections."""
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    k = coloring.k
    weights, _, _ = _color_pair_weights(graph, coloring)
    cos_table = tuple(math.cos(2.0 * math.pi * d / k) for d in range(k))

    rng = random.Random(seed)
    perm = list(range(k))
    samples = []
    for _ in range(trials):
        rng.shuffle(perm)
        samples.append(float(_quadratic_form(weights, k, tuple(perm), cos_table)))
    mean = sum(samples) / trials
    if trials > 1:
        variance = sum((s - mean) ** 2 for s in samples) / (trials - 1)
        std_error = math.sqrt(variance / trials)
    else:
        std_error = 0.0
    return RhoEstimate(mean=mean, std_error=std_error, trials=trials, seed=seed)
