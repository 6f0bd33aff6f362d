# -*- coding: utf-8 -*-
"""
Hermite 插值模块
================
分离半单点处的自由 Hermite 插值、最小次数搜索，以及消没理想切片。
"""

from .system import WordJetTable, jet_vector, poly_from_coefficients
from .interpolation import (
    InterpolationProblem,
    degree_bound,
    validate_problem,
    interpolate,
    min_degree,
    verify_interpolant,
)
from .ideals import vanishing_ideal_basis, quotient_dimension, ideal_power_slice

__all__ = [
    "WordJetTable", "jet_vector", "poly_from_coefficients",
    "InterpolationProblem", "degree_bound", "validate_problem", "interpolate",
    "min_degree", "verify_interpolant",
    "vanishing_ideal_basis", "quotient_dimension", "ideal_power_slice",
]
