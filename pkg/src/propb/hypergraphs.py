"""Hypergraph data model, text format, generators, and 2-coloring split counts.

Text format (one hypergraph per file):

    n m r       header: vertex count, edge count, uniformity (r = 0 for mixed sizes)
    v1 ... vr   then m lines, one hyperedge each, as 0-based vertex ids

Lines starting with ``#`` are comments; blank lines are ignored.  All counting
operations treat duplicate hyperedges with multiplicity, and degree/fraction
arithmetic is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FormatError, UniformityError

__all__ = [
    "Hypergraph",
    "Coloring",
    "ColoringStats",
    "parse_hypergraph",
    "serialize_hypergraph",
    "content_hash",
    "generate_complete",
    "generate_modular",
    "split_histogram",
    "DESIGNATED_SPLIT",
]


@dataclass(frozen=True)
class Hypergraph:
    """A vertex count plus an ordered multiset of hyperedges.

    Vertices are the integers ``0..n-1``.  Each edge is a strictly increasing
    tuple of at least two vertex ids.  Duplicate edges are retained, and every
    downstream count (degrees, projections, monochromatic tallies) weights
    them with multiplicity.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        edges = tuple(tuple(int(v) for v in e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if len(e) < 2:
                raise ValueError(f"hyperedge {e} has fewer than 2 vertices")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise ValueError(f"hyperedge {e} is not strictly increasing")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"hyperedge {e} out of range for n={self.n}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def uniformity(self) -> int | None:
        """Common edge size r, or None when edges have mixed sizes or there are none."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def require_uniform(self, r: int | None = None) -> int:
        """Return the uniformity, raising :class:`UniformityError` if absent.

        With ``r`` given, additionally require that exact value.  An edgeless
        hypergraph passes for any requested ``r`` (vacuously uniform).
        """
        actual = self.uniformity()
        if actual is None and self.edges:
            raise UniformityError("hypergraph has edges of mixed sizes")
        if r is not None:
            if actual is not None and actual != r:
                raise UniformityError(f"expected {r}-uniform hypergraph, got {actual}-uniform")
            return r
        if actual is None:
            raise UniformityError("edgeless hypergraph has no determined uniformity")
        return actual

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for e in self.edges:
            for v in e:
                d[v] += 1
        return d

    def average_degree(self) -> Fraction:
        """Total degree over ``n`` as an exact rational; equals ``r|E|/n`` for r-uniform input."""
        if self.n < 1:
            raise ValueError("average degree needs at least one vertex")
        return Fraction(sum(len(e) for e in self.edges), self.n)


@dataclass(frozen=True)
class Coloring:
    """A vertex color assignment with colors drawn from ``0..k-1``."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1:
            raise ValueError("a coloring needs at least one color")
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has color {c} outside [0, {self.k})")

    @property
    def n(self) -> int:
        return len(self.colors)

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.k
        for c in self.colors:
            sizes[c] += 1
        return sizes


# Split type whose frequency p drives the 4/5-uniform exclusion arguments,
# keyed by uniformity.  A split type is the unordered pair of color-class
# sizes inside one hyperedge, stored (major, minor).
DESIGNATED_SPLIT = {3: (2, 1), 4: (3, 1), 5: (3, 2)}


@dataclass(frozen=True)
class ColoringStats:
    """Per-edge split accounting for one 2-coloring of a uniform hypergraph.

    ``split_histogram`` maps a split type ``(a, r-a)`` with ``a >= r-a`` to the
    number of hyperedges split that way; the counts sum to ``|E|``.  ``p`` is
    the exact fraction of edges with the designated split for the uniformity
    (``(2,1)`` for r=3, ``(3,1)`` for r=4, ``(3,2)`` for r=5), or None when no
    split type is designated.
    """

    split_histogram: dict[tuple[int, int], int]
    mono_edges: int
    p: Fraction | None = None
    total_edges: int = field(default=0)

    def fraction(self, split: tuple[int, int]) -> Fraction:
        if self.total_edges == 0:
            return Fraction(0)
        return Fraction(self.split_histogram.get(split, 0), self.total_edges)


def split_histogram(hypergraph: Hypergraph, coloring: Coloring) -> ColoringStats:
    """Count hyperedges by split type under a 2-coloring, exactly.

    Raises :class:`UniformityError` for mixed edge sizes and ValueError when
    the coloring is not a 2-coloring of the right vertex count.
    """
    if coloring.k != 2:
        raise ValueError("split statistics are defined for 2-colorings")
    if coloring.n != hypergraph.n:
        raise ValueError(f"coloring covers {coloring.n} vertices, hypergraph has {hypergraph.n}")
    r = hypergraph.uniformity()
    if r is None and hypergraph.edges:
        raise UniformityError("split statistics need a uniform hypergraph")

    hist: dict[tuple[int, int], int] = {}
    colors = coloring.colors
    for e in hypergraph.edges:
        ones = sum(colors[v] for v in e)
        split = (max(ones, len(e) - ones), min(ones, len(e) - ones))
        hist[split] = hist.get(split, 0) + 1

    mono = hist.get((r, 0), 0) if r is not None else 0
    designated = DESIGNATED_SPLIT.get(r) if r is not None else None
    p = None
    if designated is not None and hypergraph.edges:
        p = Fraction(hist.get(designated, 0), len(hypergraph.edges))
    return ColoringStats(split_histogram=hist, mono_edges=mono, p=p, total_edges=len(hypergraph.edges))


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the hypergraph text format, reporting the offending line on error."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))

    if not rows:
        raise FormatError("missing header line 'n m r'")
    header_line, header = rows[0]
    if len(header) != 3:
        raise FormatError("header must be three integers 'n m r'", line=header_line)
    try:
        n, m, r = (int(tok) for tok in header)
    except ValueError:
        raise FormatError("header must be three integers 'n m r'", line=header_line) from None
    if n < 0 or m < 0 or r < 0:
        raise FormatError("header values must be nonnegative", line=header_line)

    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edge lines, found {len(body)}", line=header_line)

    edges: list[tuple[int, ...]] = []
    for lineno, tokens in body:
        try:
            ids = [int(tok) for tok in tokens]
        except ValueError:
            raise FormatError("edge line must contain only integers", line=lineno) from None
        if r > 0 and len(ids) != r:
            raise FormatError(f"expected {r} vertex ids, found {len(ids)}", line=lineno)
        if len(ids) < 2:
            raise FormatError("a hyperedge needs at least 2 vertices", line=lineno)
        if len(set(ids)) != len(ids):
            raise FormatError("repeated vertex within an edge", line=lineno)
        for v in ids:
            if not 0 <= v < n:
                raise FormatError(f"vertex id {v} outside [0, {n})", line=lineno)
        edges.append(tuple(sorted(ids)))

    return Hypergraph(n=n, edges=tuple(edges))


def serialize_hypergraph(hypergraph: Hypergraph) -> str:
    """Render a hypergraph in the text format (inverse of :func:`parse_hypergraph`)."""
    r = hypergraph.uniformity() or 0
    lines = [f"{hypergraph.n} {hypergraph.num_edges} {r}"]
    lines.extend(" ".join(str(v) for v in e) for e in hypergraph.edges)
    return "\n".join(lines) + "\n"


def content_hash(hypergraph: Hypergraph) -> str:
    """SHA-256 digest of the canonical serialization, for report provenance."""
    digest = hashlib.sha256(serialize_hypergraph(hypergraph).encode("utf-8")).hexdigest()
    return f"sha256:{digest}"


def generate_complete(n: int, r: int) -> Hypergraph:
    """All ``C(n, r)`` r-subsets of ``0..n-1``, once each, in lexicographic order."""
    if r < 2:
        raise ValueError(f"uniformity must be at least 2, got {r}")
    if r > n:
        raise ValueError(f"uniformity {r} exceeds vertex count {n}")
    return Hypergraph(n=n, edges=tuple(itertools.combinations(range(n), r)))


def generate_modular(n: int, r: int, modulus: int, target: int) -> Hypergraph:
    """All r-subsets whose 1-based label sum is ``target`` mod ``modulus``.

    Vertices carry labels ``id + 1`` so that instances over ``V = {1..n}``
    defined by label-sum residues are reproduced bit-exactly on 0-based ids.
    """
    if r < 2:
        raise ValueError(f"uniformity must be at least 2, got {r}")
    if r > n:
        raise ValueError(f"uniformity {r} exceeds vertex count {n}")
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    edges = tuple(
        combo
        for combo in itertools.combinations(range(n), r)
        if sum(v + 1 for v in combo) % modulus == target % modulus
    )
    return Hypergraph(n=n, edges=edges)
