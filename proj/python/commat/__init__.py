"""Exact commutative matrix multiplication with multiplication counting."""

from ._core import (
    CommatError,
    CountMismatch,
    ExactHalveUnavailable,
    ResourceLimit,
    RingMismatch,
    ShapeError,
    UnsupportedShape,
    choose_strategy,
    count_audit,
    count_table,
    multiply,
    predict_count,
    randomized_check,
    strategies,
    symbolic_verify,
)

__all__ = [
    "CommatError",
    "CountMismatch",
    "ExactHalveUnavailable",
    "ResourceLimit",
    "RingMismatch",
    "ShapeError",
    "UnsupportedShape",
    "choose_strategy",
    "count_audit",
    "count_table",
    "multiply",
    "predict_count",
    "randomized_check",
    "strategies",
    "symbolic_verify",
]
