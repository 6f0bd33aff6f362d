# -*- coding: utf-8 -*-
"""
自由幺半群中的词
================
词用字母下标元组表示（字母从 1 开始编号），空元组是单位元。
规范顺序为次数-字典序 (deglex)：先比长度，再逐字母比较。
"""

from itertools import product
from typing import Iterator, List, Tuple

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


def deglex_key(word: Word) -> Tuple[int, Word]:
    """deglex 排序键"""
    return len(word), word


def words_of_degree(g: int, d: int) -> Iterator[Word]:
    """长度恰为 d 的全部词，按字典序"""
    return product(range(1, g + 1), repeat=d)


def words_up_to(g: int, d: int) -> List[Word]:
    """长度不超过 d 的全部词，按 deglex 序"""
    out: List[Word] = []
    for k in range(d + 1):
        out.extend(words_of_degree(g, k))
    return out


def count_words(g: int, d: int) -> int:
    """长度不超过 d 的词数 1 + g + … + g^d"""
    return sum(g ** k for k in range(d + 1))


def word_to_str(word: Word) -> str:
    """(1, 2, 1) → "x1*x2*x1"，空词 → "1" """
    if not word:
        return "1"
    return "*".join(f"x{j}" for j in word)
