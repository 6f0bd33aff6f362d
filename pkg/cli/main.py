# -*- coding: utf-8 -*-
"""
命令行入口
==========
argparse 构建子命令，运行处理函数，把异常映射为退出码。

退出码：
    0  成功
    1  内部校验失败或其他错误
    2  前提不满足（包括无解、维数不符、奇异矩阵）
    3  输入格式错误
    4  资源上限

诊断信息写到 stderr，结果写到 stdout 或 --output 指定的文件。
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings, setup_logging
from exactmath import (
    DimensionMismatch,
    FormatError,
    InfeasibleError,
    NcGermError,
    NotInvertibleError,
    PreconditionFailed,
    ResourceGuardError,
    SingularMatrixError,
)

from .commands import OPERATIONS

# 配置日志
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PRECONDITION = 2
EXIT_FORMAT = 3
EXIT_RESOURCE = 4


def exit_code_for(error: BaseException) -> int:
    """异常对应的退出码"""
    if isinstance(error, FormatError):
        return EXIT_FORMAT
    if isinstance(error, ResourceGuardError):
        return EXIT_RESOURCE
    if isinstance(error, (PreconditionFailed, InfeasibleError, DimensionMismatch,
                          SingularMatrixError, NotInvertibleError)):
        return EXIT_PRECONDITION
    return EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncgerm", description="自由 nc 函数的精确计算工具")
    parser.add_argument("--threads", type=int, help="可并行循环的线程数")
    parser.add_argument("--log-level", default=None, help="日志级别，默认取配置")
    parser.add_argument("--output", help="结果写入文件而不是 stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, command in OPERATIONS.items():
        p = sub.add_parser(name, help=command.help, description=command.help)
        command.configure(p)
    return parser


def _write(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def run(argv: Optional[List[str]] = None) -> int:
    """
    执行一条命令

    Args:
        argv: 命令行参数，默认 sys.argv[1:]

    Returns:
        退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help 以 0 退出，参数错误以 2 退出
        return EXIT_OK if e.code == 0 else EXIT_FORMAT

    setup_logging(args.log_level or settings.ncgerm_log_level)
    if args.threads is not None:
        if args.threads < 1:
            print("错误: --threads 必须 ≥ 1", file=sys.stderr)
            return EXIT_FORMAT
        settings.ncgerm_threads = args.threads

    command = OPERATIONS[args.command]
    logger.debug(f"运行子命令 {command.name}")
    try:
        text = command.handler(args)
    except NcGermError as e:
        code = exit_code_for(e)
        print(f"错误 [{type(e).__name__}]: {e}", file=sys.stderr)
        return code
    except ArithmeticError as e:
        print(f"错误 [{type(e).__name__}]: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Exception as e:
        logger.exception(f"子命令 {command.name} 意外失败")
        print(f"错误 [{type(e).__name__}]: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    try:
        _write(text, args.output)
    except OSError as e:
        print(f"错误: 无法写入 {args.output}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
