from ._core import (
    BudgetExceeded,
    Polytope,
    bounds,
    catalog,
    catalog_names,
    code_params,
    common_zero_count,
    count_zeros,
    equivalent,
    is_dps,
    lattice_width,
    max_zero_count,
    minkowski_length,
    mixed_area,
    verify,
    verify_suites,
    vol2,
    vol3,
)

__all__ = [
    "BudgetExceeded",
    "Polytope",
    "bounds",
    "catalog",
    "catalog_names",
    "code_params",
    "common_zero_count",
    "count_zeros",
    "equivalent",
    "is_dps",
    "lattice_width",
    "max_zero_count",
    "minkowski_length",
    "mixed_area",
    "verify",
    "verify_suites",
    "vol2",
    "vol3",
]
