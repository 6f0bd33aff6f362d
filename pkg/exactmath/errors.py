# -*- coding: utf-8 -*-
"""
异常定义
========
ncgerm 全部模块共用的异常层次。CLI 按类别映射退出码：
前置条件类 → 2，输入格式类 → 3，资源保护 → 4。
"""

from typing import Optional


class NcGermError(Exception):
    """所有 ncgerm 异常的基类"""


class DimensionMismatch(NcGermError, ValueError):
    """形状、字母数或元数不一致"""


class SingularMatrixError(NcGermError, ArithmeticError):
    """求逆时矩阵奇异"""


class NotInvertibleError(NcGermError, ArithmeticError):
    """芽的零阶项不可逆"""


class PreconditionFailed(NcGermError):
    """输入违反运算的前置条件"""


class BasepointMismatch(PreconditionFailed):
    """两个芽的基点不同"""


class NotSemisimpleError(PreconditionFailed):
    """点不是半单的"""


class NotSeparatedError(PreconditionFailed):
    """点组不是分离的"""


class NotInAlgebraError(PreconditionFailed):
    """矩阵不属于 S(Y)"""


class InfeasibleError(NcGermError):
    """
    在次数上限内无解

    Attributes:
        cap_hit: True 表示达到次数上限，False 表示线性系统本身不相容
    """

    def __init__(self, message: str, cap_hit: bool = False):
        super().__init__(message)
        self.cap_hit = cap_hit


class InternalCheckFailure(NcGermError):
    """构造完成后的自检失败"""


class ResourceGuardError(NcGermError, MemoryError):
    """超出张量或单项式规模上限"""


class FormatError(NcGermError, ValueError):
    """输入文件格式错误"""


class ExprSyntaxError(FormatError):
    """
    表达式语法错误

    Attributes:
        position: 出错字符在原文中的位置（从 0 开始）
    """

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message}（位置 {position}）"
        super().__init__(message)
        self.position = position
