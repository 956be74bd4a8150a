"""Exact bounds for s-distance sets in real algebraic sets."""

from .bounds import (
    BoundReport,
    Family,
    bbs_bound,
    box_bound,
    dgs_bound,
    evaluate_bound,
    extended_binomial,
    general_bound,
    hypersurface_bound,
    inversion_numbers,
    permutation_bound,
    plane_curve_bound,
    sphere_union_bound,
    uniform_bound,
)
from .groebner import GroebnerBasis, buchberger, ideal_member, normal_form, s_polynomial
from .hilbert import (
    hilbert_function,
    hilbert_poly_estimate,
    standard_monomials_leq,
    vanishing_ideal,
)
from .points import PointSet, squared_distance_set
from .poly import DEGLEX, LEX, Polynomial, TermOrder, compare_monomials, format_polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Family",
    "bbs_bound",
    "box_bound",
    "dgs_bound",
    "evaluate_bound",
    "extended_binomial",
    "general_bound",
    "hypersurface_bound",
    "inversion_numbers",
    "permutation_bound",
    "plane_curve_bound",
    "sphere_union_bound",
    "uniform_bound",
    "GroebnerBasis",
    "buchberger",
    "ideal_member",
    "normal_form",
    "s_polynomial",
    "hilbert_function",
    "hilbert_poly_estimate",
    "standard_monomials_leq",
    "vanishing_ideal",
    "PointSet",
    "squared_distance_set",
    "DEGLEX",
    "LEX",
    "Polynomial",
    "TermOrder",
    "compare_monomials",
    "format_polynomial",
    "parse_polynomial",
]
