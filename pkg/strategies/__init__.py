"""
戦略モジュール。

戦略の生成、シーソー最適化、戦略ファイルの読み書きを提供する。
"""
from strategies.strategy_file import (
    strategy_to_dict,
    save_strategy,
    load_strategy,
)
from strategies.generators import (
    StrategyKind,
    DegenerateName,
    StrategySpec,
    parse_strategy_spec,
    random_hermitian,
    random_unit_vector,
    random_binary_observable,
    canonical_strategy,
    rotated_strategy,
    random_strategy,
    noisy_strategy,
    degenerate_strategy,
    build_strategy,
)
from strategies.seesaw import (
    SeesawTrace,
    seesaw_optimize,
)

__all__ = [
    # strategy_file
    "strategy_to_dict", "save_strategy", "load_strategy",
    # generators
    "StrategyKind", "DegenerateName", "StrategySpec", "parse_strategy_spec",
    "random_hermitian", "random_unit_vector", "random_binary_observable",
    "canonical_strategy", "rotated_strategy", "random_strategy", "noisy_strategy",
    "degenerate_strategy", "build_strategy",
    # seesaw
    "SeesawTrace", "seesaw_optimize",
]
