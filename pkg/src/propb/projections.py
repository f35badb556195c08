"""Derived multigraphs of a hypergraph, and the induced pair coloring.

Two projections are built here.  The pairwise projection keeps the vertex set
and joins u, v once for every hyperedge containing both.  The s-subset
projection has one vertex per s-subset of the ground set (all of them, indexed
by colexicographic rank) and joins two disjoint s-subsets once for every
hyperedge containing their union.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import SizeCapError
from .hypergraphs import Coloring, Hypergraph

__all__ = [
    "Multigraph",
    "underlying_graph",
    "sset_graph",
    "graph_from_two_uniform",
    "induced_pair_coloring",
    "colex_rank",
    "colex_subsets",
    "format_adjacency_matrix",
    "format_edge_list",
    "DEFAULT_SSET_CAP",
]

DEFAULT_SSET_CAP = 5000


@dataclass(frozen=True)
class Multigraph:
    """Loop-free multigraph as a symmetric nonnegative integer matrix.

    ``adjacency[i, j]`` is the number of parallel edges between i and j.  The
    matrix is frozen read-only after validation.  For subset projections,
    ``vertex_labels[i]`` names the subset that vertex i stands for.
    """

    n: int
    adjacency: np.ndarray
    vertex_labels: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        adj = np.asarray(self.adjacency)
        if adj.shape != (self.n, self.n):
            raise ValueError(f"adjacency shape {adj.shape} does not match n={self.n}")
        as_int = adj.astype(np.int64)
        if adj.size:
            if not np.array_equal(as_int, adj):
                raise ValueError("adjacency entries must be integers")
            if not np.array_equal(as_int, as_int.T):
                raise ValueError("adjacency must be symmetric")
            if np.any(np.diagonal(as_int) != 0):
                raise ValueError("adjacency must have a zero diagonal (no loops)")
            if np.any(as_int < 0):
                raise ValueError("edge multiplicities must be nonnegative")
        as_int.setflags(write=False)
        object.__setattr__(self, "adjacency", as_int)
        if self.vertex_labels is not None and len(self.vertex_labels) != self.n:
            raise ValueError("vertex_labels length must equal n")

    @property
    def total_multiplicity(self) -> int:
        """Number of edges counted with multiplicity."""
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def average_degree(self) -> Fraction:
        if self.n < 1:
            return Fraction(0)
        return Fraction(int(self.adjacency.sum()), self.n)

    def edge_list(self) -> list[tuple[int, int, int]]:
        """All ``(u, v, multiplicity)`` with u < v and multiplicity > 0."""
        iu, iv = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(u), int(v), int(self.adjacency[u, v])) for u, v in zip(iu, iv)]


def underlying_graph(hypergraph: Hypergraph) -> Multigraph:
    """Pairwise projection: u ~ v once per hyperedge containing both."""
    n = hypergraph.n
    adj = np.zeros((n, n), dtype=np.int64)
    for e in hypergraph.edges:
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                adj[e[i], e[j]] += 1
    return Multigraph(n=n, adjacency=adj + adj.T)


def colex_rank(subset: tuple[int, ...]) -> int:
    """Colexicographic rank of a subset of nonnegative integers.

    The sorted subset ``a_1 < ... < a_s`` sits at index ``sum(C(a_i, i))``
    among all s-subsets in colex order.
    """
    return sum(comb(a, i) for i, a in enumerate(sorted(subset), start=1))


def colex_subsets(n: int, s: int) -> list[tuple[int, ...]]:
    """All s-subsets of ``range(n)`` in colexicographic order."""
    return sorted(itertools.combinations(range(n), s), key=lambda t: t[::-1])


def sset_graph(hypergraph: Hypergraph, s: int, cap: int = DEFAULT_SSET_CAP) -> Multigraph:
    """Subset projection on ALL ``C(n, s)`` s-subsets, colex-indexed.

    Two disjoint s-subsets are joined once for every hyperedge containing
    their union; subsets lying in no hyperedge stay as isolated vertices.
    Construction refuses to build more than ``cap`` vertices.
    """
    if s < 1:
        raise ValueError(f"subset size must be at least 1, got {s}")
    num_vertices = comb(hypergraph.n, s)
    if num_vertices > cap:
        raise SizeCapError(
            f"subset graph would have C({hypergraph.n},{s}) = {num_vertices} vertices, cap is {cap}"
        )
    order = colex_subsets(hypergraph.n, s)
    index = {sub: i for i, sub in enumerate(order)}

    adj = np.zeros((num_vertices, num_vertices), dtype=np.int64)
    for f in hypergraph.edges:
        if len(f) < 2 * s:
            continue
        for union in itertools.combinations(f, 2 * s):
            # Each unordered {A, B} partition of the union is counted once by
            # forcing the union's smallest element into A.
            head, rest = union[0], union[1:]
            for tail in itertools.combinations(rest, s - 1):
                a = (head,) + tail
                in_a = set(a)
                b = tuple(x for x in union if x not in in_a)
                adj[index[a], index[b]] += 1
    return Multigraph(n=num_vertices, adjacency=adj + adj.T, vertex_labels=tuple(order))


def graph_from_two_uniform(hypergraph: Hypergraph) -> Multigraph:
    """Read a 2-uniform hypergraph as the multigraph its edge lines describe."""
    hypergraph.require_uniform(2)
    return underlying_graph(hypergraph)


def induced_pair_coloring(coloring: Coloring, n: int) -> Coloring:
    """Lift a vertex 2-coloring to the pair vertices of the 2-subset projection.

    Pair {a, b} is colored 0 when a and b agree and 1 when they differ, in the
    same colex order used by :func:`sset_graph`, so colorings and matrices
    line up index-for-index.
    """
    if coloring.k != 2:
        raise ValueError("pair coloring is induced from a 2-coloring")
    if coloring.n != n:
        raise ValueError(f"coloring covers {coloring.n} vertices, expected {n}")
    colors = coloring.colors
    lifted = tuple(0 if colors[a] == colors[b] else 1 for a, b in colex_subsets(n, 2))
    return Coloring(colors=lifted, k=2)


def format_adjacency_matrix(graph: Multigraph) -> str:
    """Textual symmetric matrix: a line with n, then n rows of multiplicities."""
    lines = [str(graph.n)]
    lines.extend(" ".join(str(int(x)) for x in row) for row in graph.adjacency)
    return "\n".join(lines) + "\n"


def format_edge_list(graph: Multigraph) -> str:
    """Textual edge-multiplicity list: header 'n m', then 'u v mult' per pair.

    Subset-projection vertex labels, when present, are emitted as comments.
    """
    edges = graph.edge_list()
    lines = [f"{graph.n} {len(edges)}"]
    if graph.vertex_labels is not None:
        lines.extend(
            f"# vertex {i}: {{{','.join(str(v) for v in label)}}}"
            for i, label in enumerate(graph.vertex_labels)
        )
    lines.extend(f"{u} {v} {mult}" for u, v, mult in edges)
    return "\n".join(lines) + "\n"
