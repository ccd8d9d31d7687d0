"""Exact and floating verification toolkit for the cubic isoparametric
tensors in dimensions 5, 8, 14 and 26."""

from ._isocubic import (
    build_upsilon,
    defect_kernel_dim,
    evaluate_cubic,
    forms_report,
    isoparametric,
    isotypic,
    magic_square,
    restricted_component_counts,
    split,
    stabilizer,
    stabilizer_dim,
    supported_dims,
    verify_identities,
)

__all__ = [
    "build_upsilon",
    "defect_kernel_dim",
    "evaluate_cubic",
    "forms_report",
    "isoparametric",
    "isotypic",
    "magic_square",
    "restricted_component_counts",
    "split",
    "stabilizer",
    "stabilizer_dim",
    "supported_dims",
    "verify_identities",
]
