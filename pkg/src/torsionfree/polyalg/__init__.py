"""Exact polynomial arithmetic: Z[x] basics, cyclotomic and cosine minimal
polynomials, factorization mod p, real root isolation, Newton polygons."""

from .poly import (
    IntPoly,
    clear_denominators,
    discriminant,
    is_squarefree,
    poly_gcd,
    resultant,
)
from .cyclotomic import (
    chebyshev_T,
    cyclotomic_poly,
    euler_phi_small,
    minpoly_cos,
    minpoly_two_cos,
    minpoly_two_cos_conductor,
)
from .modp import factor_mod_p, roots_mod_p
from .roots import (
    compare_root,
    count_roots_in,
    isolate_real_roots,
    refine_interval,
    root_bound,
    sign_at_root,
    sturm_sequence,
)
from .newton import NewtonPolygon, newton_polygon, padic_valuation

__all__ = [
    "IntPoly",
    "NewtonPolygon",
    "chebyshev_T",
    "clear_denominators",
    "compare_root",
    "count_roots_in",
    "cyclotomic_poly",
    "discriminant",
    "euler_phi_small",
    "factor_mod_p",
    "is_squarefree",
    "isolate_real_roots",
    "minpoly_cos",
    "minpoly_two_cos",
    "minpoly_two_cos_conductor",
    "newton_polygon",
    "padic_valuation",
    "poly_gcd",
    "refine_interval",
    "resultant",
    "root_bound",
    "roots_mod_p",
    "sign_at_root",
    "sturm_sequence",
]
