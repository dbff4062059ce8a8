"""Exact invariants of Lagrangian spheres from quantum homology presentations."""

from .exactalg import AlgebraError, CoeffElement, Monoid, parse_coeff
from .lagrangian import (
    LagrangianDatum, cubic_coefficients, eta_multiplier, gamma_sphere, gw_sigma_sum,
    ideal_of, is_perfect_square, lambda_eigenvalue, pair_relation,
)
from .presets import hypersurface_model, kunneth, load_preset, quadric
from .qhring import (
    QHElement, RingPresentation, intersection_number, mul, parse_element, parse_ring,
    verify_presentation,
)
from .refined import orientation_flip_check, quotient_group, reference_check, refined_cubic, specialize

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "CoeffElement", "LagrangianDatum", "Monoid", "QHElement",
    "RingPresentation", "cubic_coefficients", "eta_multiplier", "gamma_sphere",
    "gw_sigma_sum", "hypersurface_model", "ideal_of", "intersection_number",
    "is_perfect_square", "kunneth", "lambda_eigenvalue", "load_preset", "mul",
    "orientation_flip_check", "pair_relation", "parse_coeff", "parse_element",
    "parse_ring", "quadric", "quotient_group", "reference_check", "refined_cubic",
    "specialize", "verify_presentation",
]
