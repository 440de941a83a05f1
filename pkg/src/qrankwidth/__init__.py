"""Q-rank-width, d-neighbour equivalence and LC-VSP dynamic programming."""

from .cutrank import ZeroOneMatrix, cutrank, distinct_row_col_bound, rank_gf2, rank_q
from .decomposition import (
    BranchDecomposition,
    RootedDecomposition,
    caterpillar,
    enumerate_cuts,
    f_width,
    parse_decomposition,
    root_at_edge,
    serialize_decomposition,
    validate,
)
from .equivalence import (
    enumerate_classes,
    member_capped,
    nec_count,
    necd_width,
    reduce_representative,
    signature_d,
)
from .graph import Graph, bipartite_adjacency, generate_family, parse_graph
from .problems import IntSet, ProblemSpec, catalog_lookup, degree_matrix_from_H, sigma_rho, verify_solution
from .search import SearchResult, decompose, exact_optimal_decomposition, greedy_decomposition
from .solver import Solution, solve, solve_dq, solve_sigma_rho

__version__ = "0.1.0"
