"""Exact independence and k-independence polynomials of small graphs,
extremal constructions, and exhaustive optimality search."""
from __future__ import annotations

from .constructions import (
    ConstructionSpec,
    Family,
    edge_move,
    lemma4_instance,
    lex_graph,
    theorem2_graph,
    theorem3_fs_graph,
    theorem3_ls_graph,
    theorem4_graph,
    theorem5_pair,
    theorem6_pair,
    turan_graph,
)
from .formats import (
    FormatError,
    edgelist_decode,
    edgelist_encode,
    graph6_decode,
    graph6_encode,
    read_graph6_file,
)
from .graph import (
    NULL_GRAPH,
    Graph,
    GraphError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
    path_graph,
)
from .indpoly import (
    independence_polynomial,
    independence_polynomial_oracle,
    lex_polynomial_closed,
)
from .kindpoly import (
    join_clique_counts,
    k_independence_polynomial,
    r_value,
    theorem5_clique_comparison,
)
from .polynomial import (
    Dominance,
    DominanceVerdict,
    IntPolynomial,
    Ordering,
    compare_near_infinity,
    compare_near_zero,
    dominance,
    nonneg_on_nonneg_axis,
)
from .search import (
    ClassSpec,
    Objective,
    OptimalityReport,
    Verdict,
    enumerate_class,
    find_optimum,
    find_optimum_in,
)
from .verify import Theorem, VerificationReport, verify_theorem

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
