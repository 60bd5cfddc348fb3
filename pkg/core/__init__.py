"""
コアモジュール。

共通の例外、ロガー、設定定数、実行設定の読み込みを提供する。
"""
from core.exceptions import (
    ChshLabError,
    NotHermitianError,
    NoConvergenceError,
    DimensionMismatchError,
    InvalidObservableError,
    InvalidStrategyError,
    DegenerateJunkError,
    ConfigError,
    StrategyFileError,
)
from core.logger import (
    debug, info, warning, error, success, section, separator, progress, progress_done,
    set_log_level, LogLevel
)
from core.config import (
    TSIRELSON_BOUND,
    C_CONSTANT,
    DEFAULT_TOL,
    ToleranceConfig,
    get_tolerance_config,
)
from core.run_config import (
    RunConfig,
    build_run_config,
    read_config_file,
)

__all__ = [
    # exceptions
    "ChshLabError", "NotHermitianError", "NoConvergenceError", "DimensionMismatchError",
    "InvalidObservableError", "InvalidStrategyError", "DegenerateJunkError",
    "ConfigError", "StrategyFileError",
    # logger
    "debug", "info", "warning", "error", "success", "section", "separator",
    "progress", "progress_done", "set_log_level", "LogLevel",
    # config
    "TSIRELSON_BOUND", "C_CONSTANT", "DEFAULT_TOL", "ToleranceConfig", "get_tolerance_config",
    # run_config
    "RunConfig", "build_run_config", "read_config_file",
]
