"""
戦略ファイルの読み書きモジュール。

戦略を JSON 構文のテキストとして保存・読み込みします。
複素数は [re, im] の組、行列は行優先のリストで表します。

ファイルフォーマット::

    {
      "dimA": 2, "dimB": 2,
      "psi": [[0.7071067811865476, 0.0], ...],
      "A0": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [-1.0, 0.0]]],
      "A1": ..., "B0": ..., "B1": ...
    }
"""
import json
from pathlib import Path

import numpy as np

from chsh.model import OBSERVABLE_NAMES, CHSHStrategy
from core.config import DEFAULT_TOL
from core.exceptions import StrategyFileError
from linalg.dense import ComplexMatrix, ComplexVector

_REQUIRED_KEYS = ("dimA", "dimB", "psi", *OBSERVABLE_NAMES)


def _encode_complex(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _decode_array(raw: object, shape: tuple[int, ...], key: str, path: Path) -> np.ndarray:
    """[re, im] の入れ子リストを指定形状の複素配列に変換する。"""
    try:
        pairs = np.asarray(raw, dtype=np.float64)
    except (TypeError, ValueError):
        raise StrategyFileError(str(path), f"{key}: expected nested [re, im] pairs")
    if pairs.shape != (*shape, 2):
        raise StrategyFileError(str(path), f"{key}: shape {pairs.shape[:-1]} != {shape}")
    return pairs[..., 0] + 1j * pairs[..., 1]


def strategy_to_dict(S: CHSHStrategy) -> dict:
    """戦略を JSON 化できる辞書に変換する。"""
    def matrix(M: ComplexMatrix) -> list[list[list[float]]]:
        return [[_encode_complex(z) for z in row] for row in M]

    def vector(v: ComplexVector) -> list[list[float]]:
        return [_encode_complex(z) for z in v]

    data: dict = {"dimA": S.dim_a, "dimB": S.dim_b, "psi": vector(S.psi)}
    for name in OBSERVABLE_NAMES:
        data[name] = matrix(getattr(S, name))
    return data


def save_strategy(S: CHSHStrategy, path: str | Path) -> Path:
    """
    戦略を JSON ファイルに保存する。

    Parameters
    ----------
    S : CHSHStrategy
        保存する戦略
    path : str | Path
        出力先ファイルパス

    Returns
    -------
    Path
        保存したファイルのパス

    Raises
    ------
    StrategyFileError
        書き込みに失敗した場合
    """
    path = Path(path)
    try:
        path.write_text(json.dumps(strategy_to_dict(S), indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise StrategyFileError(str(path), str(e))
    return path


def load_strategy(path: str | Path, tol: float = DEFAULT_TOL) -> CHSHStrategy:
    """
    JSON ファイルから戦略を読み込み、不変条件を検証する。

    Parameters
    ----------
    path : str | Path
        戦略ファイルのパス
    tol : float
        観測量検証の許容誤差

    Returns
    -------
    CHSHStrategy
        検証済みの戦略

    Raises
    ------
    StrategyFileError
        ファイルが存在しない、JSON として不正、キーや形状が不足している場合
    InvalidStrategyError, InvalidObservableError
        内容が CHSH 戦略の不変条件を満たさない場合
    """
    path = Path(path)
    if not path.is_file():
        raise StrategyFileError(str(path), "file not found")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise StrategyFileError(str(path), str(e))

    if not isinstance(data, dict):
        raise StrategyFileError(str(path), "top level must be an object")
    missing = [key for key in _REQUIRED_KEYS if key not in data]
    if missing:
        raise StrategyFileError(str(path), f"missing keys: {', '.join(missing)}")

    dim_a, dim_b = data["dimA"], data["dimB"]
    if not (isinstance(dim_a, int) and isinstance(dim_b, int) and dim_a >= 1 and dim_b >= 1):
        raise StrategyFileError(str(path), f"invalid dims: ({dim_a}, {dim_b})")

    psi = _decode_array(data["psi"], (dim_a * dim_b,), "psi", path)
    shapes = {"A0": dim_a, "A1": dim_a, "B0": dim_b, "B1": dim_b}
    observables = {name: _decode_array(data[name], (d, d), name, path) for name, d in shapes.items()}
    return CHSHStrategy.create(psi=psi, tol=tol, **observables)
