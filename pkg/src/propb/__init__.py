"""Spectral exclusion certificates for weak 2-colorability of uniform
hypergraphs, with exhaustive oracles validating every verdict at desk scale.
"""

from .bounds import (
    EXCLUDED,
    INCONCLUSIVE,
    Certificate,
    certify,
    certify_3u,
    certify_4u,
    certify_5u,
    hoffman_lovasz_bound,
    lemma_chromatic_bound,
    min_mono_fraction_bound,
    wilf_bound,
)
from .errors import (
    BudgetError,
    ConvergenceError,
    FormatError,
    PropBError,
    SizeCapError,
    UniformityError,
)
from .hypergraphs import (
    Coloring,
    ColoringStats,
    Hypergraph,
    content_hash,
    generate_complete,
    generate_modular,
    parse_hypergraph,
    serialize_hypergraph,
    split_histogram,
)
from .oracle import (
    OracleResult,
    RhoEstimate,
    chromatic_number,
    exact_rho_expectation,
    is_k_colorable,
    is_weak_2_colorable,
    min_mono_edges,
    monte_carlo_rho,
)
from .projections import (
    Multigraph,
    colex_rank,
    colex_subsets,
    graph_from_two_uniform,
    induced_pair_coloring,
    sset_graph,
    underlying_graph,
)
from .spectra import SpectralSummary, extremal_eigenvalues, rayleigh_quotient
from .suites import (
    PropertyCheck,
    SuiteReport,
    expectation_suite,
    lemma_suite,
    random_coloring,
    random_multigraph,
    random_uniform_hypergraph,
    soundness_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Certificate",
    "Coloring",
    "ColoringStats",
    "ConvergenceError",
    "EXCLUDED",
    "FormatError",
    "Hypergraph",
    "INCONCLUSIVE",
    "Multigraph",
    "OracleResult",
    "PropBError",
    "PropertyCheck",
    "RhoEstimate",
    "SizeCapError",
    "SpectralSummary",
    "SuiteReport",
    "UniformityError",
    "certify",
    "certify_3u",
    "certify_4u",
    "certify_5u",
    "chromatic_number",
    "colex_rank",
    "colex_subsets",
    "content_hash",
    "exact_rho_expectation",
    "expectation_suite",
    "extremal_eigenvalues",
    "generate_complete",
    "generate_modular",
    "graph_from_two_uniform",
    "hoffman_lovasz_bound",
    "induced_pair_coloring",
    "is_k_colorable",
    "is_weak_2_colorable",
    "lemma_chromatic_bound",
    "lemma_suite",
    "min_mono_edges",
    "min_mono_fraction_bound",
    "monte_carlo_rho",
    "parse_hypergraph",
    "random_coloring",
    "random_multigraph",
    "random_uniform_hypergraph",
    "rayleigh_quotient",
    "serialize_hypergraph",
    "soundness_suite",
    "split_histogram",
    "sset_graph",
    "underlying_graph",
    "wilf_bound",
]
