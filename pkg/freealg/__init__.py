# -*- coding: utf-8 -*-
"""
自由代数模块
============
nc 多项式、截断 nc 幂级数、右迁移与交错多项式 h_s。
"""

from .words import Word, EMPTY_WORD, deglex_key, words_of_degree, words_up_to, count_words, word_to_str
from .polynomial import NcPoly, NcSeries, PolyLike, mul, homogeneous_component, transduct
from .alternating import alternating_poly

__all__ = [
    "Word", "EMPTY_WORD", "deglex_key", "words_of_degree", "words_up_to",
    "count_words", "word_to_str",
    "NcPoly", "NcSeries", "PolyLike", "mul", "homogeneous_component", "transduct",
    "alternating_poly",
]
