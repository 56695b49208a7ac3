import os
from dataclasses import dataclass
from dotenv import load_dotenv
import logging

from error_handler import ConfigurationError

# 加载环境变量
load_dotenv()

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass(frozen=True)
class Limits:
    """一次命令运行使用的资源上限"""

    max_formula_rank: int
    max_oracle_rank: int
    max_depth: int
    max_alcoves: int
    patience: int
    workers: int


class Config:
    """配置管理类"""

    # 日志配置
    LOG_LEVEL = os.getenv('SHIMIN_LOG', 'WARNING').upper()

    # 公式计算的秩上限
    MAX_FORMULA_RANK = os.getenv('SHIMIN_MAX_FORMULA_RANK', '8')

    # 枚举器（oracle）配置
    MAX_ORACLE_RANK = os.getenv('SHIMIN_MAX_ORACLE_RANK', '4')
    MAX_DEPTH = os.getenv('SHIMIN_MAX_DEPTH', '60')
    MAX_ALCOVES = os.getenv('SHIMIN_MAX_ALCOVES', '500000')
    PATIENCE = os.getenv('SHIMIN_PATIENCE', '2')
    WORKERS = os.getenv('SHIMIN_WORKERS', '1')

    @classmethod
    def _positive_int(cls, name, raw):
        try:
            value = int(raw)
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"{name} 不是整数: {raw!r}", original_error=e)
        if value <= 0:
            raise ConfigurationError(f"{name} 必须为正数: {value}")
        return value

    @classmethod
    def log_level(cls, level=None):
        """命令行的 --log 优先于 SHIMIN_LOG，取值必须是标准日志级别"""
        name = (level or cls.LOG_LEVEL).upper()
        if name not in LOG_LEVELS:
            raise ConfigurationError(f"日志级别取值无效: {name}（可选 {', '.join(LOG_LEVELS)}）")
        return name

    @classmethod
    def validate_config(cls):
        """验证必要的配置项"""
        cls.log_level()

        cls.limits()
        return True

    @classmethod
    def limits(cls, **overrides):
        """返回资源上限，命令行参数（非 None）覆盖环境变量"""
        raw = {
            'max_formula_rank': cls.MAX_FORMULA_RANK,
            'max_oracle_rank': cls.MAX_ORACLE_RANK,
            'max_depth': cls.MAX_DEPTH,
            'max_alcoves': cls.MAX_ALCOVES,
            'patience': cls.PATIENCE,
            'workers': cls.WORKERS,
        }
        for key, value in overrides.items():
            if value is not None:
                raw[key] = value

        return Limits(**{key: cls._positive_int(key, value) for key, value in raw.items()})


# 日志配置
def setup_logging(level=None):
    """设置日志 - 仅输出到控制台"""
    logging.basicConfig(
        level=getattr(logging, Config.log_level(level)),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler()  # 输出到 stderr，不写文件
        ]
    )

    return logging.getLogger(__name__)
