"""Spectral chromatic bounds and exclusion certificates.

The graph-side bounds are the classical eigenvalue-ratio lower bound on the
chromatic number (Hoffman, extended by Lovász to arbitrary symmetric edge
weightings), its conflict-tolerant refinement allowing a fraction p of
monochromatic edges, and the 1 + lambda_max upper bound (Wilf).  On top of
those sit the uniformity-specific certifiers: an r-uniform hypergraph whose
average degree exceeds the spectral bound built from its projections cannot
be weakly 2-colored, so the verdict EXCLUDED is a proof of non-2-colorability
while INCONCLUSIVE carries no information.

Every certificate records all intermediate quantities so the single final
inequality can be re-checked externally, and a verdict can only be EXCLUDED
when the average degree clears the bound by more than the comparison
tolerance: floating-point eigenvalue error must never flip a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import UniformityError
from .hypergraphs import Hypergraph, content_hash
from .projections import DEFAULT_SSET_CAP, Multigraph, sset_graph, underlying_graph
from .spectra import DEFAULT_EIG_TOL, extremal_eigenvalues

__all__ = [
    "Certificate",
    "EXCLUDED",
    "INCONCLUSIVE",
    "DEFAULT_VERDICT_TOL",
    "hoffman_lovasz_bound",
    "wilf_bound",
    "min_mono_fraction_bound",
    "lemma_chromatic_bound",
    "certify_3u",
    "certify_4u",
    "certify_5u",
    "certify",
]

EXCLUDED = "EXCLUDED"
INCONCLUSIVE = "INCONCLUSIVE"
DEFAULT_VERDICT_TOL = 1e-6

_THEOREM_BY_UNIFORMITY = {}  # filled after the certifiers are defined


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable outcome of one exclusion-bound evaluation.

    ``quantities`` holds every number entering the final comparison
    (average degree, eigenvalues, bound, margin = bound - average degree);
    ``exact`` carries exact rational renditions where available.  ``tight``
    marks a margin within tolerance of zero.
    """

    theorem: str
    verdict: str
    quantities: dict[str, float]
    exact: dict[str, str]
    tolerance: float
    tight: bool
    input_hash: str
    notes: tuple[str, ...] = field(default=())

    @property
    def excluded(self) -> bool:
        return self.verdict == EXCLUDED

    def margin(self) -> float:
        return self.quantities["bound"] - self.quantities["avg_degree"]

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "verdict": self.verdict,
            "quantities": dict(sorted(self.quantities.items())),
            "exact": dict(sorted(self.exact.items())),
            "tolerance": self.tolerance,
            "tight": self.tight,
            "inputHash": self.input_hash,
            "notes": list(self.notes),
        }


def hoffman_lovasz_bound(weights: np.ndarray, eig_tol: float = DEFAULT_EIG_TOL) -> float:
    """Lower bound ``1 - lambda_max/lambda_min`` on the chromatic number.

    Valid for any symmetric zero-diagonal weighting of a graph's adjacency
    pattern, including negative weights; invariant under positive scaling.
    """
    weights = np.asarray(weights)
    if not weights.any():
        raise ValueError("the zero matrix has lambda_min = 0 and no spectral ratio")
    if weights.ndim != 2 or np.any(np.diagonal(weights) != 0):
        raise ValueError("weight matrix must be square with a zero diagonal")
    summary = extremal_eigenvalues(weights, tol=eig_tol)
    if summary.lambda_min >= 0:
        raise ValueError("weight matrix must have a negative eigenvalue")
    return 1.0 - summary.lambda_max / summary.lambda_min


def wilf_bound(graph: Multigraph, eig_tol: float = DEFAULT_EIG_TOL) -> float:
    """Upper bound ``1 + lambda_max`` on the chromatic number of a multigraph."""
    return 1.0 + extremal_eigenvalues(graph.adjacency, tol=eig_tol).lambda_max


def min_mono_fraction_bound(graph: Multigraph, k: int, eig_tol: float = DEFAULT_EIG_TOL) -> float:
    """Lower bound on the monochromatic-edge fraction of every k-coloring.

    Returns ``(dbar + (k-1) lambda_min) / (dbar k)``; a nonpositive value is
    vacuous.  Requires at least one edge so that the average degree is
    positive and lambda_min is negative.
    """
    if k < 2:
        raise ValueError(f"need at least 2 colors, got {k}")
    if graph.total_multiplicity == 0:
        raise ValueError("monochromatic fraction bound needs at least one edge")
    dbar = float(graph.average_degree())
    lam_min = extremal_eigenvalues(graph.adjacency, tol=eig_tol).lambda_min
    return (dbar + (k - 1) * lam_min) / (dbar * k)


def lemma_chromatic_bound(graph: Multigraph, p: float, eig_tol: float = DEFAULT_EIG_TOL) -> float:
    """Lower bound on colors needed when a fraction p of edges may clash.

    Returns ``(1 - lambda_min/dbar) / (p - lambda_min/dbar)``.  At p = 0 on a
    regular graph this is the eigenvalue-ratio bound; at p = 1 it allows one
    color.
    """
    if graph.total_multiplicity == 0:
        raise ValueError("chromatic bound needs at least one edge")
    dbar = float(graph.average_degree())
    lam_min = extremal_eigenvalues(graph.adjacency, tol=eig_tol).lambda_min
    ratio = lam_min / dbar
    if p - ratio <= 0:
        raise ValueError(f"allowed fraction p={p} must exceed lambda_min/dbar = {ratio}")
    return (1.0 - ratio) / (p - ratio)


def _empty_certificate(hypergraph: Hypergraph, theorem: str, tol: float) -> Certificate:
    quantities = {
        "n": float(hypergraph.n),
        "r": 0.0,
        "edge_count": 0.0,
        "avg_degree": 0.0,
        "lambda_min": 0.0,
        "bound": 0.0,
        "margin": 0.0,
    }
    return Certificate(
        theorem=theorem,
        verdict=INCONCLUSIVE,
        quantities=quantities,
        exact={"avg_degree": "0"},
        tolerance=tol,
        tight=False,
        input_hash=content_hash(hypergraph),
        notes=("no hyperedges: trivially 2-colorable, nothing to exclude",),
    )


def _certify_uniform(
    hypergraph: Hypergraph,
    r: int,
    theorem: str,
    tol: float,
    eig_tol: float,
    sset_cap: int,
) -> Certificate:
    if hypergraph.num_edges == 0:
        return _empty_certificate(hypergraph, theorem, tol)
    hypergraph.require_uniform(r)

    n = hypergraph.n
    dbar = hypergraph.average_degree()
    lam_min = extremal_eigenvalues(underlying_graph(hypergraph).adjacency, tol=eig_tol).lambda_min

    quantities: dict[str, float] = {
        "n": float(n),
        "r": float(r),
        "edge_count": float(hypergraph.num_edges),
        "avg_degree": float(dbar),
        "lambda_min": lam_min,
    }
    if r == 3:
        bound = -1.5 * lam_min
    else:
        pair = sset_graph(hypergraph, 2, cap=sset_cap)
        lam2_min = extremal_eigenvalues(pair.adjacency, tol=eig_tol).lambda_min
        quantities["lambda2_min"] = lam2_min
        if r == 4:
            bound = -2.0 * lam_min - (n - 1) / 3.0 * lam2_min
        else:
            bound = -2.5 * lam_min - 5.0 * (n - 1) / 12.0 * lam2_min

    margin = bound - float(dbar)
    quantities["bound"] = bound
    quantities["margin"] = margin
    excluded = float(dbar) > bound + tol
    tight = abs(margin) <= tol

    notes: list[str] = []
    if excluded:
        notes.append(
            f"average degree {float(dbar):.6g} exceeds the spectral bound {bound:.6g}: "
            "no weak 2-coloring exists"
        )
    else:
        notes.append(
            f"average degree {float(dbar):.6g} does not exceed the spectral bound {bound:.6g}: "
            "2-colorability is not excluded"
        )
        if tight:
            notes.append("TIGHT: the bound is met with equality")

    return Certificate(
        theorem=theorem,
        verdict=EXCLUDED if excluded else INCONCLUSIVE,
        quantities=quantities,
        exact={"avg_degree": str(dbar)},
        tolerance=tol,
        tight=tight,
        input_hash=content_hash(hypergraph),
        notes=tuple(notes),
    )


def certify_3u(
    hypergraph: Hypergraph,
    tol: float = DEFAULT_VERDICT_TOL,
    eig_tol: float = DEFAULT_EIG_TOL,
    sset_cap: int = DEFAULT_SSET_CAP,
) -> Certificate:
    """3-uniform exclusion: 2-colorable forces ``dbar <= -(3/2) lambda_min``."""
    return _certify_uniform(hypergraph, 3, "T3U", tol, eig_tol, sset_cap)


def certify_4u(
    hypergraph: Hypergraph,
    tol: float = DEFAULT_VERDICT_TOL,
    eig_tol: float = DEFAULT_EIG_TOL,
    sset_cap: int = DEFAULT_SSET_CAP,
) -> Certificate:
    """4-uniform exclusion: ``dbar <= -2 lambda_min - (n-1)/3 lambda2_min``.

    ``lambda2_min`` is the smallest eigenvalue of the 2-subset projection on
    all C(n, 2) pair vertices.
    """
    return _certify_uniform(hypergraph, 4, "T4U", tol, eig_tol, sset_cap)


def certify_5u(
    hypergraph: Hypergraph,
    tol: float = DEFAULT_VERDICT_TOL,
    eig_tol: float = DEFAULT_EIG_TOL,
    sset_cap: int = DEFAULT_SSET_CAP,
) -> Certificate:
    """5-uniform exclusion: ``dbar <= -(5/2) lambda_min - 5(n-1)/12 lambda2_min``."""
    return _certify_uniform(hypergraph, 5, "T5U", tol, eig_tol, sset_cap)


_THEOREM_BY_UNIFORMITY.update({3: certify_3u, 4: certify_4u, 5: certify_5u})
_THEOREM_BY_NAME = {"3u": certify_3u, "4u": certify_4u, "5u": certify_5u}


def certify(
    hypergraph: Hypergraph,
    theorem: str = "auto",
    tol: float = DEFAULT_VERDICT_TOL,
    eig_tol: float = DEFAULT_EIG_TOL,
    sset_cap: int = DEFAULT_SSET_CAP,
) -> Certificate:
    """Run the exclusion certifier selected by name, or dispatch on uniformity.

    ``auto`` picks the certifier matching the input's uniformity (3, 4 or 5);
    an edgeless input short-circuits to a trivial INCONCLUSIVE certificate.
    """
    if theorem == "auto":
        if hypergraph.num_edges == 0:
            return certify_3u(hypergraph, tol=tol, eig_tol=eig_tol, sset_cap=sset_cap)
        r = hypergraph.require_uniform()
        runner = _THEOREM_BY_UNIFORMITY.get(r)
        if runner is None:
            raise UniformityError(f"no exclusion certificate for {r}-uniform hypergraphs")
    else:
        runner = _THEOREM_BY_NAME.get(theorem)
        if runner is None:
            raise ValueError(f"unknown theorem {theorem!r}; expected auto, 3u, 4u or 5u")
    return runner(hypergraph, tol=tol, eig_tol=eig_tol, sset_cap=sset_cap)
