import logging
import functools
import traceback
from datetime import datetime

logger = logging.getLogger(__name__)

# 退出码约定
EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INADMISSIBLE = 2
EXIT_VERIFICATION = 3
EXIT_RESOURCE = 4


class ShiMinError(Exception):
    """基础异常类，error_code 同时作为命令行退出码"""
    default_code = EXIT_PARSE

    def __init__(self, message, error_code=None, original_error=None):
        super().__init__(message)
        self.error_code = error_code if error_code is not None else self.default_code
        self.original_error = original_error
        self.timestamp = datetime.now()


class ParseError(ShiMinError):
    """输入解析错误"""
    pass


class DomainError(ShiMinError):
    """参数不在运算的定义域内（不是正根、维数不符等）"""
    pass


class ConfigurationError(ShiMinError):
    """配置错误（秩不合法、环境变量取值无效）"""
    pass


class InadmissibleError(ShiMinError):
    """符号类型不对应任何 Shi 区域"""
    default_code = EXIT_INADMISSIBLE


class VerificationError(ShiMinError):
    """公式与枚举结果不一致"""
    default_code = EXIT_VERIFICATION


class OracleError(ShiMinError):
    """枚举器内部不变量被破坏（K 向量重复、退化点）"""
    default_code = EXIT_VERIFICATION


class ResourceLimitError(ShiMinError):
    """超出资源上限，partial 保存已得到的部分结果"""
    default_code = EXIT_RESOURCE

    def __init__(self, message, partial=None, error_code=None, original_error=None):
        super().__init__(message, error_code=error_code, original_error=original_error)
        self.partial = partial


class SaturationError(ShiMinError):
    """区域内没有在绝对值意义下支配其他元素的成员，需要扩大半径"""
    default_code = EXIT_RESOURCE


def error_handler(func):
    """错误处理装饰器：把异常转换为退出码"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ShiMinError as e:
            logger.error(f"命令失败 [{func.__name__}]: {e}")
            return e.error_code
        except Exception as e:
            logger.error(f"未知错误 [{func.__name__}]: {e}")
            logger.debug(f"错误详情: {traceback.format_exc()}")
            return EXIT_PARSE
    return wrapper


class ErrorReporter:
    """错误报告器：按类型统计验证中的反例"""

    def __init__(self, max_examples=5):
        self.max_examples = max_examples
        self.error_counts = {}
        self.examples = {}

    def report_error(self, error_type, error_message, context=None):
        """报告错误"""
        # 记录错误计数
        self.error_counts[error_type] = self.error_counts.get(error_type, 0) + 1

        # 每种类型只保留前几个反例
        bucket = self.examples.setdefault(error_type, [])
        if len(bucket) < self.max_examples:
            bucket.append({'message': error_message, 'context': context or {}})
            logger.debug(f"错误报告: {error_type}: {error_message}")

    def has_errors(self):
        return bool(self.error_counts)

    def get_error_stats(self):
        """获取错误统计"""
        return {
            'error_counts': self.error_counts.copy(),
            'total_errors': sum(self.error_counts.values()),
            'examples': {key: list(value) for key, value in self.examples.items()},
        }
