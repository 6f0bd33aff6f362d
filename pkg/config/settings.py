# -*- coding: utf-8 -*-
"""
配置管理模块
============
使用 pydantic-settings 从环境变量和 .env 文件加载 ncgerm 的运行参数。

知识点：
--------
1. BaseSettings 会自动从环境变量或 .env 文件读取值
2. 环境变量名与字段名对应（不区分大小写），如 NCGERM_MEM_CAP
3. 库函数在调用时读取 settings，CLI 参数和测试可以直接覆盖字段
"""

from pathlib import Path
from pydantic_settings import BaseSettings
from pydantic import Field


class Settings(BaseSettings):
    """
    应用配置类

    所有配置项都可以通过环境变量或 .env 文件设置。
    """

    # ========== 资源保护 ==========
    ncgerm_mem_cap: int = Field(
        default=10_000_000,
        description="稠密张量允许的最大元素个数 (g·s²)^ℓ·s²"
    )
    ncgerm_monomial_cap: int = Field(
        default=200_000,
        description="泛型矩阵求值时允许的单项式总数"
    )

    # ========== 插值与采样 ==========
    ncgerm_default_dmax: int = Field(default=12, description="插值次数搜索上限 Dmax")
    ncgerm_sample_bound: int = Field(default=10, description="随机整数样本范围 [-B, B]")
    ncgerm_retry_cap: int = Field(default=20, description="未定义求值的重采样次数")

    # ========== 运行配置 ==========
    ncgerm_threads: int = Field(default=1, description="可并行循环使用的线程数")
    ncgerm_log_level: str = Field(default="INFO", description="CLI 日志级别")

    # ========== Pydantic 配置 ==========
    model_config = {
        # .env 文件路径（相对于项目根目录）
        "env_file": Path(__file__).parent.parent / ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
    }


# 创建全局配置实例（单例模式）
settings = Settings()


if __name__ == "__main__":
    print("=" * 50)
    print("ncgerm 配置信息")
    print("=" * 50)
    for name, value in settings.model_dump().items():
        print(f"{name}: {value}")
    print("=" * 50)
