"""Rooted complete minors in line graphs with a Kempe edge coloring.

Given a multigraph H, a partition of E(H) into matchings whose pairwise
unions are connected, and a transversal T of the partition, the solver
produces k connected, pairwise disjoint, pairwise incident edge sets of H,
one transversal edge each — the branching sets of a complete minor of the
line graph rooted at T.
"""

from .coloring import (
    MatchingPartition,
    Verdict,
    pair_end_count,
    pair_subgraph_ends,
    verify_kempe,
    verify_matching_partition,
    verify_transversal,
)
from .generators import (
    complete_graph,
    delete_vertex,
    gen_circulant,
    is_perfect_one_factorization,
    k4_seed,
    splice,
)
from .graph import (
    EdgeRecord,
    LineGraphView,
    Multigraph,
    contract,
    edge,
    edge_components,
    line_graph,
)
from .oracle import OracleBudget, oracle_solve
from .paths import (
    PathSystem,
    Separator,
    SideSplit,
    disjoint_paths_or_separator,
    edge_disjoint_paths,
    split_sides,
)
from .solver import (
    BagSystem,
    CompleteFallback,
    ReductionTrace,
    TraceStep,
    assert_complete_fallback,
    solve,
    solve_complete,
    solve_parallel,
    verify_solution,
)

__all__ = [
    "BagSystem",
    "CompleteFallback",
    "EdgeRecord",
    "LineGraphView",
    "MatchingPartition",
    "Multigraph",
    "OracleBudget",
    "PathSystem",
    "ReductionTrace",
    "Separator",
    "SideSplit",
    "TraceStep",
    "Verdict",
    "assert_complete_fallback",
    "complete_graph",
    "contract",
    "delete_vertex",
    "disjoint_paths_or_separator",
    "edge",
    "edge_components",
    "edge_disjoint_paths",
    "gen_circulant",
    "is_perfect_one_factorization",
    "k4_seed",
    "line_graph",
    "oracle_solve",
    "pair_end_count",
    "pair_subgraph_ends",
    "solve",
    "solve_complete",
    "solve_parallel",
    "splice",
    "split_sides",
    "verify_kempe",
    "verify_matching_partition",
    "verify_solution",
    "verify_transversal",
]
