from bocs_engine.linalg.fields import (
    RATIONALS,
    Field,
    format_scalar,
    parse_scalar,
    scalar,
)
from bocs_engine.linalg.matrices import (
    RowReduction,
    SolutionSpace,
    coordinates,
    entries,
    identity,
    independent_indices,
    inverse,
    is_invertible,
    is_zero_matrix,
    kernel_basis,
    matrices_equal,
    matrix,
    rank,
    rref,
    solve,
    zeros,
)

__all__ = [
    "RATIONALS",
    "Field",
    "RowReduction",
    "SolutionSpace",
    "coordinates",
    "entries",
    "format_scalar",
    "identity",
    "independent_indices",
    "inverse",
    "is_invertible",
    "is_zero_matrix",
    "kernel_basis",
    "matrices_equal",
    "matrix",
    "parse_scalar",
    "rank",
    "rref",
    "scalar",
    "solve",
    "zeros",
]
