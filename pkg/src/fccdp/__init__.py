"""Function-correcting codes with data protection.

Codes here protect a function value f(u) against t_f symbol errors while
also keeping every pair of codewords at distance at least d_d = 2t_d + 1.
"""

from __future__ import annotations

from .bounds import BoundReport, lower_bound_suite, plotkin_fcc_dp, smallest_feasible_n, smallest_feasible_n_dp, upper_bound_suite
from .construct import (
    color_map,
    construct_hamming_weight,
    construct_linear_fcc,
    construct_locally_binary,
    construct_locally_bounded,
    construct_two_step,
    construct_two_step_search,
    coset_subcode_distance,
    function_ball,
    is_locally_bounded,
    lift_dcode,
)
from .distmat import DistanceMatrix, build_cdrm, build_cfdm, build_drm, build_drm_dp, build_fdm
from .dsearch import SearchResult, SearchStatus, is_dcode, min_length_code, min_length_dcode
from .gfcore import FccCode, HammingWeight, LinearCode, LinearMap, TableFunction, WeightMod, Word
from .mdgraph import Verdict, build_min_distance_graph, component_count, is_mds, is_perfect, strict_fcc_feasible
from .verify import Ambiguous, check_fcc, decode_data, decode_function, exhaustive_error_sweep, monte_carlo_sweep

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "lower_bound_suite",
    "plotkin_fcc_dp",
    "smallest_feasible_n",
    "smallest_feasible_n_dp",
    "upper_bound_suite",
    "color_map",
    "construct_hamming_weight",
    "construct_linear_fcc",
    "construct_locally_binary",
    "construct_locally_bounded",
    "construct_two_step",
    "construct_two_step_search",
    "coset_subcode_distance",
    "function_ball",
    "is_locally_bounded",
    "lift_dcode",
    "DistanceMatrix",
    "build_cdrm",
    "build_cfdm",
    "build_drm",
    "build_drm_dp",
    "build_fdm",
    "SearchResult",
    "SearchStatus",
    "is_dcode",
    "min_length_code",
    "min_length_dcode",
    "FccCode",
    "HammingWeight",
    "LinearCode",
    "LinearMap",
    "TableFunction",
    "WeightMod",
    "Word",
    "Verdict",
    "build_min_distance_graph",
    "component_count",
    "is_mds",
    "is_perfect",
    "strict_fcc_feasible",
    "Ambiguous",
    "check_fcc",
    "decode_data",
    "decode_function",
    "exhaustive_error_sweep",
    "monte_carlo_sweep",
]
