"""
CHSH剛性検証ラボのメインモジュール。

戦略を構成して抽出・定理チェック・スイープ・反例再現・二乗和恒等式の確認・
シーソー最適化を行い、レポートと CSV を出力する。

終了コード: 0 = 成功、1 = 入力・設定・検証エラー、2 = 定理の領域外
（ジャンク状態が定義できない、または不等式が満たされない）。
"""
import argparse
import csv
import dataclasses
import sys
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Sequence

import numpy as np

from core import logger
from core.config import CSV_HEADER, TSIRELSON_BOUND, ToleranceConfig, get_tolerance_config
from core.exceptions import ChshLabError, ConfigError, DegenerateJunkError
from core.logger import LogLevel
from core.messages import msg
from core.run_config import RunConfig, build_run_config
from chsh.model import CHSHStrategy, bias, tsirelson_sos_residual
from extraction.verify import BoundReport, state_bound, second_operator_bound, verify_theorem
from gap.counterexample import reproduce_counterexample
from strategies.generators import (
    StrategyKind,
    build_strategy,
    noisy_strategy,
    parse_strategy_spec,
    random_strategy,
    rotated_strategy,
)
from strategies.seesaw import seesaw_optimize
from strategies.strategy_file import save_strategy

# 終了コード
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_THEOREM = 2


# =============================================================================
# データクラス
# =============================================================================

@dataclass(frozen=True)
class SweepRecord:
    """スイープ1点分の結果（CSVの1行）。"""
    param: float | int
    epsilon: float
    delta: float
    state_err: float
    a0_err: float
    a1_err: float
    b0_err: float
    b1_err: float
    all_pass: bool
    small_eps: bool

    @property
    def state_bound(self) -> float:
        return state_bound(self.epsilon)

    @property
    def second_bound(self) -> float:
        return second_operator_bound(self.epsilon)

    @classmethod
    def from_report(cls, param: float | int, report: BoundReport) -> "SweepRecord":
        """BoundReport から1行分の記録を作る。"""
        def actual(name: str) -> float:
            return report.record(name).actual

        return cls(
            param=param,
            epsilon=report.epsilon,
            delta=report.delta,
            state_err=actual("state_error"),
            a0_err=actual("a0_error"),
            a1_err=actual("a1_error"),
            b0_err=actual("b0_error"),
            b1_err=actual("b1_error"),
            all_pass=report.all_satisfied,
            small_eps=report.small_eps_regime,
        )

    def to_row(self) -> list[str]:
        """CSV_HEADER の順に並べた文字列のリスト。"""
        values = (
            self.param, self.epsilon, self.delta,
            self.state_err, self.state_bound,
            self.a0_err, self.state_bound, self.a1_err, self.second_bound,
            self.b0_err, self.state_bound, self.b1_err, self.second_bound,
            self.all_pass, self.small_eps,
        )
        return [_format_value(value) for value in values]


def _format_value(value: object) -> str:
    """CSV用の表記（実数は往復可能な最短表記、真偽値は true/false）。"""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


# =============================================================================
# ログ出力
# =============================================================================

def _log_processing_start(start_time: datetime) -> None:
    """処理開始ログを出力する。"""
    logger.info(msg("processing_start", time=start_time.strftime('%Y-%m-%d %H:%M:%S')))


def _log_processing_end(start_time: datetime) -> None:
    """処理終了ログを出力する。"""
    end_time = datetime.now()
    logger.separator("=", 50)
    logger.info(msg("processing_end", time=end_time.strftime('%Y-%m-%d %H:%M:%S')))
    logger.info(msg("elapsed_time", time=end_time - start_time))


def _log_strategy(label: str, S: CHSHStrategy) -> None:
    """戦略の概要を出力する。"""
    logger.info(msg("strategy_label", label=label))
    logger.info(msg("strategy_dims", dim_a=S.dim_a, dim_b=S.dim_b))
    logger.info(msg("strategy_bias", bias=bias(S)))


def _log_bound_report(report: BoundReport, tolerances: ToleranceConfig) -> None:
    """BoundReport を1不等式1行で出力する。"""
    logger.info(msg("strategy_epsilon", epsilon=report.epsilon, delta=report.delta))
    logger.section(msg("verify_title"))
    for record in report.records:
        logger.info(msg("verify_record", mark="✓" if record.satisfied else "✗",
                        name=record.name, actual=record.actual, bound=record.bound))
    if not report.small_eps_regime:
        logger.warning(msg("small_eps_outside", epsilon=report.epsilon, cutoff=tolerances.small_eps_cutoff))


# =============================================================================
# 戦略の構成
# =============================================================================

def _build_configured_strategy(config: RunConfig, tolerances: ToleranceConfig) -> tuple[str, CHSHStrategy]:
    """設定から戦略を生成し、検証許容誤差を適用する。"""
    spec = parse_strategy_spec(
        config.strategy,
        theta_a=config.theta_a,
        theta_b=config.theta_b,
        seed=config.seed,
        magnitude=config.magnitude,
        dim_a=config.dims[0],
        dim_b=config.dims[1],
    )
    S = _with_tolerance(build_strategy(spec), tolerances)
    return spec.label, S


def _with_tolerance(S: CHSHStrategy, tolerances: ToleranceConfig) -> CHSHStrategy:
    """検証許容誤差を差し替えて再検証した戦略を返す。"""
    if S.tol == tolerances.validation_tol:
        return S
    S = dataclasses.replace(S, tol=tolerances.validation_tol)
    S.validate()
    return S


def _verify_report(S: CHSHStrategy, tolerances: ToleranceConfig) -> BoundReport:
    return verify_theorem(S, slack=tolerances.bound_slack, small_eps_cutoff=tolerances.small_eps_cutoff)


# =============================================================================
# サブコマンド
# =============================================================================

def cmd_verify(config: RunConfig, tolerances: ToleranceConfig) -> int:
    """戦略を抽出し、定理の全不等式を検証する。"""
    label, S = _build_configured_strategy(config, tolerances)
    _log_strategy(label, S)
    try:
        report = _verify_report(S, tolerances)
    except DegenerateJunkError as e:
        logger.error(msg("verify_degenerate", projection=e.projection_sq_norm))
        return EXIT_THEOREM

    _log_bound_report(report, tolerances)
    if report.all_satisfied:
        logger.success(msg("verify_all_pass"))
        return EXIT_OK
    logger.error(msg("verify_failed", count=len(report.failures())))
    return EXIT_THEOREM


def _sweep_points(config: RunConfig, tolerances: ToleranceConfig) -> list[tuple[float | int, CHSHStrategy]]:
    """スイープの各点の (パラメータ, 戦略) を格子順に返す。"""
    kind = config.strategy
    if kind == StrategyKind.ROTATED.value:
        return [(float(theta), _with_tolerance(rotated_strategy(float(theta), config.theta_b), tolerances))
                for theta in config.grid()]
    if kind == StrategyKind.NOISY.value:
        return [(float(m), _with_tolerance(noisy_strategy(config.seed, float(m)), tolerances))
                for m in config.grid()]
    if kind == "seesaw":
        points = []
        for seed in range(config.seed, config.seed + config.seeds):
            S0 = _with_tolerance(random_strategy(config.dims[0], config.dims[1], seed), tolerances)
            points.append((seed, seesaw_optimize(S0, max_iters=config.max_iters).final))
        return points
    raise ConfigError(msg("config_sweep_strategy", spec=kind))


def cmd_sweep(config: RunConfig, tolerances: ToleranceConfig) -> int:
    """パラメータ格子上で誤差と上界を計算し、CSVに書き出す。"""
    if config.out is None:
        raise ConfigError(msg("config_out_required"))

    points = _sweep_points(config, tolerances)
    logger.section(msg("sweep_title", kind=config.strategy, count=len(points)))

    records: list[SweepRecord] = []
    for i, (param, S) in enumerate(points, 1):
        logger.progress(i, len(points), msg("sweep_point_label"))
        records.append(SweepRecord.from_report(param, _verify_report(S, tolerances)))
    logger.progress_done()

    out_path = Path(config.out)
    with out_path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(record.to_row() for record in records)
    logger.info(msg("sweep_written", rows=len(records), path=out_path))

    failures = sum(1 for record in records if not record.all_pass)
    if failures:
        logger.error(msg("sweep_failures", count=failures))
        return EXIT_THEOREM
    return EXIT_OK


def cmd_counterexample(config: RunConfig, tolerances: ToleranceConfig) -> int:
    """核の規約による反例を再現する。"""
    report = reproduce_counterexample()
    logger.section(msg("counterexample_title"))
    for name, matrix in (("X′_B", report.XprimeB), ("Z′_B", report.ZprimeB),
                         ("{X′_B, Z′_B}", report.anticommutator)):
        logger.info(msg("counterexample_matrix", name=name,
                        matrix=np.array2string(matrix.real, precision=6, suppress_small=True)))
    logger.info(msg("counterexample_norm", norm=report.anticommutator_norm))
    logger.info(msg("counterexample_ceiling", ceiling=report.bias_ceiling))
    if report.claim_refuted:
        logger.success(msg("counterexample_refuted"))
    else:
        logger.info(msg("counterexample_not_refuted"))
    return EXIT_OK


def cmd_tsirelson(config: RunConfig, tolerances: ToleranceConfig) -> int:
    """設定された戦略群について二乗和恒等式の残差を調べる。"""
    if config.strategy == StrategyKind.RANDOM.value:
        strategies = [
            (f"random({config.dims[0]}x{config.dims[1]}, seed={seed})",
             _with_tolerance(random_strategy(config.dims[0], config.dims[1], seed), tolerances))
            for seed in range(config.seed, config.seed + config.seeds)
        ]
    else:
        strategies = [_build_configured_strategy(config, tolerances)]

    logger.section(msg("tsirelson_title", count=len(strategies)))
    worst = 0.0
    for label, S in strategies:
        residual = tsirelson_sos_residual(S)
        worst = max(worst, residual)
        logger.info(msg("tsirelson_residual", label=label, residual=residual))
    logger.info(msg("tsirelson_max", residual=worst, tol=tolerances.validation_tol))
    return EXIT_OK if worst <= tolerances.validation_tol else EXIT_THEOREM


def cmd_optimize(config: RunConfig, tolerances: ToleranceConfig) -> int:
    """シーソー最適化を実行し、必要なら最終戦略を保存する。"""
    _, S0 = _build_configured_strategy(config, tolerances)
    logger.section(msg("optimize_title", dim_a=S0.dim_a, dim_b=S0.dim_b, seed=config.seed))
    trace = seesaw_optimize(S0, max_iters=config.max_iters)
    for k, value in enumerate(trace.biases):
        logger.info(msg("optimize_step", k=k, bias=value))
    logger.info(msg("optimize_final", bias=trace.final_bias, gap=TSIRELSON_BOUND - trace.final_bias))

    if config.out is not None:
        path = save_strategy(trace.final, config.out)
        logger.info(msg("strategy_saved", path=path))
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "counterexample": cmd_counterexample,
    "tsirelson": cmd_tsirelson,
    "optimize": cmd_optimize,
}


# =============================================================================
# 引数解析
# =============================================================================

class _ArgumentParser(argparse.ArgumentParser):
    """使い方の誤りを終了コード 1 の ConfigError として扱うパーサー。"""

    def error(self, message: str) -> None:
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    """サブコマンドと共通フラグを持つパーサーを作る。"""
    common = _ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (same keys as the flags)")
    common.add_argument("--strategy", help="canonical | rotated | noisy | random | seesaw | "
                                           "degenerate:<name> | file:<path>")
    common.add_argument("--theta-a", dest="theta_a", type=float)
    common.add_argument("--theta-b", dest="theta_b", type=float)
    common.add_argument("--dims", nargs=2, type=int, metavar=("DIM_A", "DIM_B"))
    common.add_argument("--seed", type=int)
    common.add_argument("--seeds", type=int)
    common.add_argument("--magnitude", type=float)
    common.add_argument("--grid-start", dest="grid_start", type=float)
    common.add_argument("--grid-end", dest="grid_end", type=float)
    common.add_argument("--grid-step", dest="grid_step", type=float)
    common.add_argument("--out")
    common.add_argument("--tol", type=float)
    common.add_argument("--max-iters", dest="max_iters", type=int)
    common.add_argument("--verbose", action="store_true")

    parser = _ArgumentParser(prog="chsh-lab", description=msg("tool_description"))
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common], help=msg(f"help_{name}"))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """CHSH剛性検証ラボのメイン処理。終了コードを返す。"""
    try:
        args = build_parser().parse_args(argv)
        logger.set_log_level(LogLevel.DEBUG if args.verbose else LogLevel.INFO)

        logger.separator("=")
        logger.info(msg("tool_title"))
        logger.separator("=")
        start_time = datetime.now()
        _log_processing_start(start_time)

        config = build_run_config(args.command, vars(args), args.config)
        tolerances = get_tolerance_config(config.tol)
        exit_code = COMMANDS[args.command](config, tolerances)
        _log_processing_end(start_time)
        return exit_code
    except DegenerateJunkError as e:
        logger.error(str(e))
        return EXIT_THEOREM
    except ChshLabError as e:
        logger.error(str(e))
        return EXIT_INVALID
    except OSError as e:
        logger.error(msg("unexpected_error", error=e))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
