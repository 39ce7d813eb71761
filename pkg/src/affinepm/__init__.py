"""Positively multiplicative graphs attached to affine Weyl groups.

The graphs Gamma_rho, Gamma_gamma, Gamma_B0 and Gamma_B are built exactly
over Laurent polynomials; ``pmgraph`` certifies positive multiplicativity and
``gamma`` checks the combinatorial constructions against alcove geometry.
"""

from .cartan import UnsupportedType, build_affine_data
from .gamma import (
    DomainError,
    build_gamma_B0,
    build_gamma_fundamental,
    build_gamma_gamma,
    build_gamma_rho,
    build_gamma_WJ_geometric,
    build_grassmannian_graph,
    verify_expansion,
    verify_main_theorem,
    verify_pieri,
    verify_UJ,
)
from .laurent import FFMatrix, LaurentPoly, RationalFunction
from .pmgraph import (
    WeightedDigraph,
    expand,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    minimal_polynomial_degree,
    multiplicative_basis_at,
    typed_isomorphic,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "FFMatrix",
    "LaurentPoly",
    "RationalFunction",
    "UnsupportedType",
    "WeightedDigraph",
    "build_affine_data",
    "build_gamma_B0",
    "build_gamma_WJ_geometric",
    "build_gamma_fundamental",
    "build_gamma_gamma",
    "build_gamma_rho",
    "build_grassmannian_graph",
    "expand",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "minimal_polynomial_degree",
    "multiplicative_basis_at",
    "typed_isomorphic",
    "verify_UJ",
    "verify_expansion",
    "verify_main_theorem",
    "verify_pieri",
]
