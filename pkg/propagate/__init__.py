# -*- coding: utf-8 -*-
"""
最小传播模块
============
截断 LAC 序列的最小传播、半单点处代数的嵌入、增长界递推与非单射例子。
"""

from .minimal import (
    PropagationConfig,
    bilinear_tensors,
    propagate_minimal,
    minimality_defect,
    solve_propagation_level,
)
from .embedding import embed_algebra, one_term_propagation, verify_multiplicative
from .growth import (
    GrowthSeq,
    growth_bound,
    backward_shift,
    shifted_power,
    closed_form,
    closed_form_matches,
    binomial_identities_hold,
)
from .separation import (
    admissible_first_orders,
    block_diagonal_indices,
    separating_example,
    vanishes_on_block_diagonal,
)

__all__ = [
    "PropagationConfig", "bilinear_tensors", "propagate_minimal", "minimality_defect",
    "solve_propagation_level",
    "embed_algebra", "one_term_propagation", "verify_multiplicative",
    "GrowthSeq", "growth_bound", "backward_shift", "shifted_power", "closed_form",
    "closed_form_matches", "binomial_identities_hold",
    "admissible_first_orders", "block_diagonal_indices", "separating_example",
    "vanishes_on_block_diagonal",
]
