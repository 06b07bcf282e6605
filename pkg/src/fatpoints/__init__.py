"""Exact interpolation engine for initial degrees of symbolic powers of
finite point sets in projective space, with star-configuration generation,
detection, and classification checks."""

__version__ = "0.1.0"

from .exactalg import Matrix, rank, kernel_basis
from .geometry import (
    Arrangement,
    Hyperplane,
    PointSet,
    ProjPoint,
    containing_hyperplane,
    general_position,
    hyperplane_through,
    incident,
)
from .interpolation import (
    Form,
    MonomialBasis,
    VanishingSystem,
    alpha,
    condition_row,
    directional_derivative,
    divide_by_linear,
    forms_basis,
    graded_dim,
    monomial_basis,
    mult_at,
    vanishing_system,
)
from .configurations import (
    StarData,
    concurrent_lines_example,
    five_general_points,
    independent_subset,
    kummer16,
    kummer_fixture,
    random_arrangement,
    random_points,
    star,
    validate_16_6,
)
from .analysis import (
    AlphaReport,
    Classification,
    WaldschmidtBounds,
    alpha_table,
    classify,
    corollary_check,
    detect_star,
    hypothesis_check,
    waldschmidt_bounds,
)

__all__ = [
    "__version__",
    "Matrix", "rank", "kernel_basis",
    "Arrangement", "Hyperplane", "PointSet", "ProjPoint",
    "containing_hyperplane", "general_position", "hyperplane_through", "incident",
    "Form", "MonomialBasis", "VanishingSystem",
    "alpha", "condition_row", "directional_derivative", "divide_by_linear",
    "forms_basis", "graded_dim", "monomial_basis", "mult_at", "vanishing_system",
    "StarData", "concurrent_lines_example", "five_general_points",
    "independent_subset", "kummer16", "kummer_fixture", "random_arrangement",
    "random_points", "star", "validate_16_6",
    "AlphaReport", "Classification", "WaldschmidtBounds",
    "alpha_table", "classify", "corollary_check", "detect_star",
    "hypothesis_check", "waldschmidt_bounds",
]
