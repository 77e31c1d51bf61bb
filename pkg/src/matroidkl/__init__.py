"""Exact Kazhdan-Lusztig polynomials of matroids, their equivariant versions,
and checks of their conjectured root and positivity properties."""

from .kl import (KLResult, degree_split, kl_braid_type, kl_k2n, kl_polynomial,
                 kl_thagomizer_closed, kl_uniform_1d_closed, kl_uniform_type,
                 q_transform)
from .lattice import characteristic_polynomial, lattice_of_flats
from .matroid import (build_matroid, complete_bipartite, complete_graph,
                      contract_element, direct_sum, graphic, linear,
                      parse_spec, thagomizer, uniform)
from .polynomial import Poly
from .roots import (all_roots_negative_real, check_contraction_interlacing,
                    interlaces, is_log_concave_no_internal_zeros)

__version__ = "0.1.0"

__all__ = [
    "KLResult", "Poly", "all_roots_negative_real", "build_matroid", "characteristic_polynomial",
    "check_contraction_interlacing", "complete_bipartite", "complete_graph", "contract_element",
    "degree_split", "direct_sum", "graphic", "interlaces", "is_log_concave_no_internal_zeros",
    "kl_braid_type", "kl_k2n", "kl_polynomial", "kl_thagomizer_closed", "kl_uniform_1d_closed",
    "kl_uniform_type", "lattice_of_flats", "linear", "parse_spec", "q_transform", "thagomizer",
    "uniform",
]
