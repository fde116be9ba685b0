"""Exact Clifford algebra representations, prolongations and planar connections."""

from ._core import (
    DimensionMismatch,
    InconsistentPropagation,
    InvalidInput,
    acceptance_report,
    check_identity,
    classify,
    epsilon_signs,
    epsilon_table,
    lie_algebra_dimension,
    planarity,
    prolongation_basis,
    rep,
    run_cli,
    sxi,
    verify,
)

__all__ = [
    "DimensionMismatch",
    "InconsistentPropagation",
    "InvalidInput",
    "acceptance_report",
    "check_identity",
    "classify",
    "epsilon_signs",
    "epsilon_table",
    "lie_algebra_dimension",
    "planarity",
    "prolongation_basis",
    "rep",
    "run_cli",
    "sxi",
    "verify",
]
