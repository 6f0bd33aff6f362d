# -*- coding: utf-8 -*-
"""
精确有理数标量
==============
标量统一使用 sympy 的 QQ 域元素（底层为 gmpy2.mpq 或 PythonMPQ），
分子分母为任意精度整数，运算后自动约分。

知识点：
--------
1. QQ(p, q) 构造有理数，QQ.convert(x) 把 int 等类型规范化为域元素
2. 文件格式中标量写成 "p/q" 字符串，"3" 是 "3/1" 的简写
"""

from typing import Any, Union

from sympy import QQ

from .errors import FormatError

# 标量类型（用于类型标注）
Scalar = Any

ZERO = QQ(0)
ONE = QQ(1)


def to_scalar(value: Union[int, str, Any]) -> Scalar:
    """
    把 int、"p/q" 字符串或已有的有理数转换为 QQ 元素

    Raises:
        FormatError: 字符串无法解析或分母为 0
    """
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, bool):
        raise FormatError(f"无法把布尔值转换为标量: {value!r}")
    try:
        return QQ.convert(value)
    except Exception as e:
        raise FormatError(f"无法转换为标量: {value!r} ({e})") from e


def parse_scalar(text: str) -> Scalar:
    """解析 "p/q" 或 "p" 形式的有理数字符串"""
    raw = text.strip()
    num, sep, den = raw.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise FormatError(f"不是合法的分数字符串: {text!r}") from None
    if q == 0:
        raise FormatError(f"分母为 0: {text!r}")
    return QQ(p, q)


def format_scalar(value: Scalar) -> str:
    """输出为 "p/q"，分母恒为正"""
    x = QQ.convert(value)
    return f"{x.numerator}/{x.denominator}"
