"""Exact triangle partitioning: solvers, counting oracles, growth numerics.

The lexicographic DP (:mod:`tripart.lexdp`) decides and counts partitions
of a graph's vertices into triangles; :mod:`tripart.oracles` recounts by
two independent methods; :mod:`tripart.analysis` quantifies how the DP's
state space grows.  :mod:`tripart.graphs` holds the graph type, DIMACS
I/O, and seeded generators.
"""
from .analysis import (
    AnalysisPoint,
    EntropyMax,
    GrowthRow,
    RegionMax,
    audit_csv,
    binom,
    chain_csv,
    entropy,
    g_func,
    growth_csv,
    growth_row,
    log_binom,
    maximize_g,
    region_audit,
    state_space_sum,
    substitution_chain,
)
from .graphs import (
    FAMILIES,
    MAX_VERTICES,
    CapacityError,
    Graph,
    GraphFormatError,
    Violation,
    edge_count_within,
    generate,
    is_triangle,
    parse_graph,
    relabel,
    serialize_graph,
    triangle_count_within,
    validate_partition,
)
from .lexdp import DpStats, count_lex, is_valid_state, lex_successors, min_uncovered, solve_lex
from .oracles import (
    IE_MODES,
    TABULATED_MAX_N,
    count_brute,
    count_ie,
    enumerate_partitions,
    ie_term,
    ie_terms_by_size,
    triangle_table,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisPoint",
    "CapacityError",
    "DpStats",
    "EntropyMax",
    "FAMILIES",
    "Graph",
    "GraphFormatError",
    "GrowthRow",
    "IE_MODES",
    "MAX_VERTICES",
    "RegionMax",
    "TABULATED_MAX_N",
    "Violation",
    "audit_csv",
    "binom",
    "chain_csv",
    "count_brute",
    "count_ie",
    "count_lex",
    "edge_count_within",
    "entropy",
    "enumerate_partitions",
    "g_func",
    "generate",
    "growth_csv",
    "growth_row",
    "ie_term",
    "ie_terms_by_size",
    "is_triangle",
    "is_valid_state",
    "lex_successors",
    "log_binom",
    "maximize_g",
    "min_uncovered",
    "parse_graph",
    "region_audit",
    "relabel",
    "serialize_graph",
    "solve_lex",
    "state_space_sum",
    "substitution_chain",
    "triangle_count_within",
    "triangle_table",
    "validate_partition",
    "__version__",
]
