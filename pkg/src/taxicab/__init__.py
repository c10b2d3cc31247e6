"""Exact tools for sets in R^d that determine few taxicab distances."""
from .counting import (
    CountPolynomial,
    lambda_coefficients,
    lambda_size_polynomial,
    lambda_size_recursive,
)
from .exact import bernoulli, binomial, faulhaber_sum
from .geometry import (
    Configuration,
    DistanceSet,
    Metric,
    distance_set,
    generate_lambda,
    l1_distance,
    l1_norm,
    linf_distance,
    rotated_basis_coords,
    to_linf_plane,
)
from .search import GridSpec, max_k_distance_sets, verify_conjecture_instance
from .similarity import SimilarityTransform, apply_transform, are_similar, canonicalize, is_axis_parallel

__version__ = "0.1.0"

__all__ = [
    "CountPolynomial", "lambda_coefficients", "lambda_size_polynomial", "lambda_size_recursive",
    "bernoulli", "binomial", "faulhaber_sum",
    "Configuration", "DistanceSet", "Metric", "distance_set", "generate_lambda",
    "l1_distance", "l1_norm", "linf_distance", "rotated_basis_coords", "to_linf_plane",
    "GridSpec", "max_k_distance_sets", "verify_conjecture_instance",
    "SimilarityTransform", "apply_transform", "are_similar", "canonicalize", "is_axis_parallel",
]
