"""Exact spectral invariants of the signless Laplacian at p = infinity.

Everything is computed in rational arithmetic: the smallest normalized
signless infinity-Laplacian eigenvalue of a graph, the minimal induced
(inf, inf)-norm generalized inverse of its weighted signless incidence
matrix, and the bit-exact reciprocal identity between the two.
"""

from .errors import (
    ConsistencyError,
    HypothesisError,
    InputError,
    ParseError,
    SiglapError,
)
from .etfamily import (
    ETParams,
    ETReport,
    build_et,
    closed_form_min_norm,
    et_report,
    optimal_vector,
)
from .exact import (
    Mat,
    Vec,
    induced_inf_norm,
    mat_mul,
    mat_vec,
    matrix,
    rank,
    transpose,
    vec_inf_norm,
    vector,
)
from .geninv import (
    DualityReport,
    GenInvResult,
    KernelRow,
    is_generalized_inverse,
    kernel_row,
    min_norm_bicyclic_median,
    min_norm_generalized_inverse,
    verify_duality,
)
from .graphs import (
    Graph,
    degrees,
    emit_edge_list,
    is_bipartite,
    is_connected,
    odd_walk_length,
    parse_edge_list,
)
from .lp import LPProblem, LPSolution, min_l1_affine, solve, weighted_median_l1
from .spectral import (
    EigenResult,
    WeightedIncidence,
    evaluate,
    incidence_matrix,
    mu_infinity,
    q_infinity_formula,
    q_infinity_lp,
    weighted_incidence,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DualityReport",
    "ETParams",
    "ETReport",
    "EigenResult",
    "GenInvResult",
    "Graph",
    "HypothesisError",
    "InputError",
    "KernelRow",
    "LPProblem",
    "LPSolution",
    "Mat",
    "ParseError",
    "SiglapError",
    "Vec",
    "WeightedIncidence",
    "build_et",
    "closed_form_min_norm",
    "degrees",
    "emit_edge_list",
    "et_report",
    "evaluate",
    "incidence_matrix",
    "induced_inf_norm",
    "is_bipartite",
    "is_connected",
    "is_generalized_inverse",
    "kernel_row",
    "mat_mul",
    "mat_vec",
    "matrix",
    "min_l1_affine",
    "min_norm_bicyclic_median",
    "min_norm_generalized_inverse",
    "mu_infinity",
    "odd_walk_length",
    "optimal_vector",
    "parse_edge_list",
    "q_infinity_formula",
    "q_infinity_lp",
    "rank",
    "solve",
    "transpose",
    "vec_inf_norm",
    "vector",
    "verify_duality",
    "weighted_incidence",
    "weighted_median_l1",
]
