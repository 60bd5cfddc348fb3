"""
実行設定読み取りモジュール。

コマンドライン引数と JSON 構文の設定ファイル（--config）から実行設定を組み立てます。
明示的に指定したフラグは設定ファイルの値より優先されます。

設定ファイルの例::

    {
      "strategy": "rotated",
      "theta_b": 0.0,
      "grid_start": 0.0, "grid_end": 0.1, "grid_step": 0.01,
      "out": "sweep.csv"
    }
"""
import json
import math
from dataclasses import dataclass, fields
from decimal import Decimal
from pathlib import Path
from typing import Any

import numpy as np

from core.config import SEESAW_MAX_ITERS
from core.exceptions import ConfigError
from core.messages import msg

# コマンドごとの既定の戦略
_DEFAULT_STRATEGY: dict[str, str] = {
    "verify": "canonical",
    "sweep": "rotated",
    "tsirelson": "random",
    "optimize": "random",
    "counterexample": "canonical",
}


def _decimal_places(value: float) -> int:
    """最短の十進表記での小数点以下の桁数（repr(0.05) → 2、repr(1e-20) → 20）。"""
    exponent = Decimal(repr(float(value))).as_tuple().exponent
    return max(0, -exponent) if isinstance(exponent, int) else 0


@dataclass(frozen=True)
class RunConfig:
    """1回の実行の設定を保持するデータクラス。"""
    command: str
    strategy: str = "canonical"
    theta_a: float = 0.0
    theta_b: float = 0.0
    dims: tuple[int, int] = (2, 2)
    seed: int = 0
    seeds: int = 1
    magnitude: float = 0.0
    grid_start: float = 0.0
    grid_end: float = 0.1
    grid_step: float = 0.01
    out: str | None = None
    tol: float | None = None
    max_iters: int = SEESAW_MAX_ITERS

    def grid(self) -> np.ndarray:
        """
        start から end まで step 刻みの格子を返す。

        点数は floor((end − start)/step + 1e-9) + 1 とし、np.linspace で生成する
        （累積加算による丸め誤差を避ける）。

        Raises
        ------
        ConfigError
            step ≤ 0、または格子が空の場合
        """
        if not self.grid_step > 0.0:
            raise ConfigError(msg("config_bad_step", step=self.grid_step))
        span = self.grid_end - self.grid_start
        if not math.isfinite(span) or span < 0.0:
            raise ConfigError(msg("config_empty_grid", start=self.grid_start, end=self.grid_end,
                                  step=self.grid_step))
        count = math.floor(span / self.grid_step + 1e-9) + 1
        grid = np.linspace(self.grid_start, self.grid_start + (count - 1) * self.grid_step, count)
        # start と step の最短十進表記の桁数で丸める
        return np.round(grid, max(_decimal_places(self.grid_start), _decimal_places(self.grid_step)))

    def validate(self) -> None:
        """値の範囲と出力先を検証する。"""
        if len(self.dims) != 2 or any(d < 1 for d in self.dims):
            raise ConfigError(msg("config_bad_dims", dims=self.dims))
        if self.seeds < 1:
            raise ConfigError(msg("config_bad_seeds", seeds=self.seeds))
        if self.max_iters < 1:
            raise ConfigError(msg("config_bad_max_iters", max_iters=self.max_iters))
        if not self.magnitude >= 0.0:
            raise ConfigError(msg("config_bad_magnitude", magnitude=self.magnitude))
        if self.out is not None:
            parent = Path(self.out).resolve().parent
            if not parent.is_dir():
                raise ConfigError(msg("config_out_dir_missing", path=parent))
        if self.command == "sweep":
            self.grid()


_KEYS = {f.name for f in fields(RunConfig)} - {"command"}


def read_config_file(path: str | Path) -> dict[str, Any]:
    """
    設定ファイルを読み込み、キーを検証した辞書を返す。

    Raises
    ------
    ConfigError
        ファイルが存在しない、JSON として不正、未知のキーを含む場合
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(msg("config_file_not_found", path=path))
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ConfigError(msg("config_file_invalid", path=path, detail=e))
    if not isinstance(data, dict):
        raise ConfigError(msg("config_file_invalid", path=path, detail="top level must be an object"))
    unknown = sorted(set(data) - _KEYS)
    if unknown:
        raise ConfigError(msg("config_unknown_key", keys=", ".join(unknown)))
    return data


def _coerce(key: str, value: Any) -> Any:
    """設定値を RunConfig のフィールド型に変換する。"""
    try:
        if key in ("theta_a", "theta_b", "magnitude", "grid_start", "grid_end", "grid_step", "tol"):
            return float(value)
        if key in ("seed", "seeds", "max_iters"):
            if isinstance(value, float) and not value.is_integer():
                raise ValueError(value)
            return int(value)
        if key == "dims":
            dims = tuple(int(d) for d in value)
            if len(dims) != 2:
                raise ValueError(value)
            return dims
        if key in ("strategy", "out"):
            return str(value)
    except (TypeError, ValueError):
        raise ConfigError(msg("config_bad_value", key=key, value=value))
    return value


def build_run_config(command: str, flags: dict[str, Any], config_path: str | None = None) -> RunConfig:
    """
    フラグと設定ファイルから RunConfig を組み立てて検証する。

    Parameters
    ----------
    command : str
        サブコマンド名
    flags : dict[str, Any]
        コマンドライン引数（未指定は None）
    config_path : str | None
        設定ファイルのパス

    Returns
    -------
    RunConfig
        検証済みの実行設定

    Raises
    ------
    ConfigError
        設定ファイルまたは値が不正な場合
    """
    values: dict[str, Any] = {"strategy": _DEFAULT_STRATEGY.get(command, "canonical")}
    if config_path is not None:
        values.update({key: value for key, value in read_config_file(config_path).items() if value is not None})
    values.update({key: value for key, value in flags.items() if key in _KEYS and value is not None})

    config = RunConfig(command=command, **{key: _coerce(key, value) for key, value in values.items()})
    config.validate()
    return config
