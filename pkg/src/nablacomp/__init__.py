"""Exact counting of meaningful compositions in the grad/curl/div operator chain.

The operator family on R^n has n first-order operators; a composition is
meaningful when each operator's codomain matches the next one's domain.
Counts are computed from adjacency-matrix powers, characteristic-polynomial
recurrences, Fibonacci closed forms, and brute-force enumeration.
"""
from nablacomp.errors import DomainError, ResourceError
from nablacomp.operator_model import OperatorSet, build_operator_set, composable
from nablacomp.graph import ZeroOneMatrix, adjacency_matrix, edge_count, semantic_adjacency
from nablacomp.polynomial import (
    IntPolynomial,
    binomial,
    charpoly_determinant,
    charpoly_explicit,
    charpoly_recurrence,
    reduced_recurrence_poly,
)
from nablacomp.recurrence import (
    BigMatrix,
    LinearRecurrence,
    extend,
    make_recurrence,
    matrix_power_direct,
    matrix_power_recurrent,
)
from nablacomp.counting import (
    CountSeries,
    count_closed_form,
    count_enumerate,
    count_matrix,
    count_recurrence,
    expected_power_pattern,
    fibonacci,
    series,
)

__version__ = "0.1.0"

__all__ = [
    "BigMatrix",
    "CountSeries",
    "DomainError",
    "IntPolynomial",
    "LinearRecurrence",
    "OperatorSet",
    "ResourceError",
    "ZeroOneMatrix",
    "adjacency_matrix",
    "binomial",
    "build_operator_set",
    "charpoly_determinant",
    "charpoly_explicit",
    "charpoly_recurrence",
    "composable",
    "count_closed_form",
    "count_enumerate",
    "count_matrix",
    "count_recurrence",
    "edge_count",
    "expected_power_pattern",
    "extend",
    "fibonacci",
    "make_recurrence",
    "matrix_power_direct",
    "matrix_power_recurrent",
    "reduced_recurrence_poly",
    "semantic_adjacency",
    "series",
]
