"""Exact maximum weight independent set solving via minimal separators
and potential maximal cliques, with recognition tools for long-hole-free
and k-prism-free graphs."""

__version__ = "0.1.0"

from .graph import Graph, emit_graph, format_weight, parse_graph, parse_weight
from .recognition import (
    ChordalityResult,
    CliqueTree,
    PrismWitness,
    clique_tree,
    find_k_prism,
    find_long_hole,
    is_chordal,
    largest_prism,
    minimal_triangulation,
)
from .separators import (
    Separator,
    analyze_separator,
    brute_force_minimal_separators,
    component_cover_witness,
    enumerate_minimal_separators,
)
from .pmc import (
    DominationResult,
    Pmc,
    block_family,
    certify_pmc,
    dominate_pmc,
    enumerate_pmcs,
    find_covering_component,
    find_separator_cover_pair,
    is_pmc,
)
from .engine import (
    Block,
    SolveConfig,
    SolveResult,
    SolveStats,
    brute_force_mwis,
    index_caps,
    solve_bt,
    solve_mwis,
)
from .solvers import (
    BalancedSeparatorResult,
    TreeDecomposition,
    balanced_separator,
    build_tree_decomposition,
    clique_tree_decomposition,
    solve,
    solve_kprism_alg,
    solve_mwc_complement,
    solve_subexp1,
    solve_subexp2,
    solve_treewidth_dp,
)

__all__ = [
    "Graph",
    "parse_graph",
    "emit_graph",
    "parse_weight",
    "format_weight",
    "ChordalityResult",
    "CliqueTree",
    "PrismWitness",
    "find_long_hole",
    "find_k_prism",
    "largest_prism",
    "is_chordal",
    "minimal_triangulation",
    "clique_tree",
    "Separator",
    "analyze_separator",
    "enumerate_minimal_separators",
    "brute_force_minimal_separators",
    "component_cover_witness",
    "Pmc",
    "DominationResult",
    "certify_pmc",
    "is_pmc",
    "enumerate_pmcs",
    "block_family",
    "find_covering_component",
    "find_separator_cover_pair",
    "dominate_pmc",
    "Block",
    "SolveConfig",
    "SolveResult",
    "SolveStats",
    "index_caps",
    "solve_bt",
    "solve_mwis",
    "brute_force_mwis",
    "TreeDecomposition",
    "BalancedSeparatorResult",
    "balanced_separator",
    "build_tree_decomposition",
    "clique_tree_decomposition",
    "solve_treewidth_dp",
    "solve_kprism_alg",
    "solve_subexp1",
    "solve_subexp2",
    "solve_mwc_complement",
    "solve",
]
