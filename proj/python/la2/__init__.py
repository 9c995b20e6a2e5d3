"""Exact solver and solution counter for LA2-type quadratic Diophantine
equations (Python bindings over the C++ core)."""

from ._la2 import (
    CapExceededError,
    ClassificationError,
    DomainError,
    RingMismatchError,
    ThresholdError,
    UnsupportedClassError,
    brute_force_solutions,
    classify,
    count_solutions,
    enumerate_solutions,
    evaluate,
    fundamental_solution,
    make_z1_equation,
    pell_sequence,
    reduce,
    thresholds,
    verify,
)

__all__ = [
    "CapExceededError",
    "ClassificationError",
    "DomainError",
    "RingMismatchError",
    "ThresholdError",
    "UnsupportedClassError",
    "brute_force_solutions",
    "classify",
    "count_solutions",
    "enumerate_solutions",
    "evaluate",
    "fundamental_solution",
    "make_z1_equation",
    "pell_sequence",
    "reduce",
    "thresholds",
    "verify",
]
