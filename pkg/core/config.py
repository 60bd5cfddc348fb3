"""
CHSH剛性検証ラボの設定定数モジュール。

プロジェクト全体で使用される定数・許容誤差を一元管理します。
"""
import math
import os
from dataclasses import dataclass

from core.exceptions import ConfigError
from core.messages import msg


# --- CHSH定数 ---
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)  # Tsirelson限界 2√2
C_CONSTANT = 128.0 * math.sqrt(2.0)  # 反交換子評価の定数 c = 128√2

# --- 数値許容誤差 ---
DEFAULT_TOL = 1e-9  # エルミート性・対合性の検証（相対）
PSI_NORM_TOL = 1e-10  # 共有状態の正規化
EIG_TIE_TOL = 1e-10  # 固有値の縮退判定（相対）
PHASE_TOL = 1e-12  # 位相正規化で「非ゼロ」とみなす成分の大きさ
KERNEL_THRESHOLD = 1e-10  # 核とみなす固有値の大きさ（相対）
JUNK_THRESHOLD = 1e-12  # Φ⁺ブロックの二乗ノルムがこれ以下ならジャンク状態は未定義

# --- 定理チェック設定 ---
SMALL_EPS_CUTOFF = 0.1  # これを超えるεは「小ε領域外」として記録する
BOUND_SLACK = 1e-8  # 各不等式比較の余裕
REFUTATION_THRESHOLD = 1e-6  # 反交換子ノルムがこれを超えれば主張は反証される

# --- シーソー最適化設定 ---
SEESAW_MAX_ITERS = 50
SEESAW_TOL = 1e-12

# --- 出力設定 ---
CSV_HEADER = (
    "param", "epsilon", "delta",
    "state_err", "state_bound",
    "a0_err", "a0_bound", "a1_err", "a1_bound",
    "b0_err", "b0_bound", "b1_err", "b1_bound",
    "all_pass", "small_eps",
)

# 許容誤差を上書きする環境変数
TOL_ENV_VAR = "CHSH_LAB_TOL"


@dataclass(frozen=True)
class ToleranceConfig:
    """実行時に使用する許容誤差の組。"""
    validation_tol: float = DEFAULT_TOL     # 二値オブザーバブル検証
    bound_slack: float = BOUND_SLACK        # 不等式比較の余裕
    small_eps_cutoff: float = SMALL_EPS_CUTOFF


def _parse_tolerance(raw: str | float, source: str) -> float:
    """許容誤差の値を検証して float に変換する。"""
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ConfigError(msg("config_bad_tol", value=raw, source=source))
    if not math.isfinite(value) or value <= 0.0:
        raise ConfigError(msg("config_bad_tol", value=raw, source=source))
    return value


def get_tolerance_config(override: float | str | None = None) -> ToleranceConfig:
    """許容誤差設定を取得する。

    優先順位はフラグ（override）> 環境変数 ``CHSH_LAB_TOL`` > 既定値。

    Parameters
    ----------
    override : float | str | None
        コマンドラインの ``--tol`` の値。

    Returns
    -------
    ToleranceConfig
        解決済みの許容誤差設定

    Raises
    ------
    ConfigError
        値が正の有限数として解釈できない場合
    """
    if override is not None:
        return ToleranceConfig(validation_tol=_parse_tolerance(override, "--tol"))

    env_value = os.environ.get(TOL_ENV_VAR)
    if env_value:
        return ToleranceConfig(validation_tol=_parse_tolerance(env_value, TOL_ENV_VAR))

    return ToleranceConfig()
