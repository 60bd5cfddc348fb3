"""strategies.strategy_file のテスト。"""
import json
from pathlib import Path

import numpy as np
import pytest

from chsh.model import bias
from core.config import TSIRELSON_BOUND
from core.exceptions import InvalidObservableError, StrategyFileError
from strategies.generators import canonical_strategy, random_strategy
from strategies.strategy_file import load_strategy, save_strategy, strategy_to_dict

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def test_save_and_load(tmp_path):
    S = random_strategy(3, 2, seed=9)
    path = save_strategy(S, tmp_path / "strategy.json")
    loaded = load_strategy(path)
    for name in ("psi", "A0", "A1", "B0", "B1"):
        np.testing.assert_array_equal(getattr(loaded, name), getattr(S, name))


def test_document_layout():
    data = strategy_to_dict(canonical_strategy())
    assert (data["dimA"], data["dimB"]) == (2, 2)
    assert len(data["psi"]) == 4 and len(data["psi"][0]) == 2
    assert data["A0"][1][1] == [-1.0, 0.0]


def test_load_sample_file():
    S = load_strategy(SAMPLES / "canonical_strategy.json")
    assert bias(S) == pytest.approx(TSIRELSON_BOUND, abs=1e-12)


def _write(tmp_path, data) -> Path:
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data) if not isinstance(data, str) else data, encoding="utf-8")
    return path


def test_load_errors(tmp_path):
    with pytest.raises(StrategyFileError):
        load_strategy(tmp_path / "missing.json")
    with pytest.raises(StrategyFileError):
        load_strategy(_write(tmp_path, "{not json"))

    data = strategy_to_dict(canonical_strategy())
    del data["B1"]
    with pytest.raises(StrategyFileError) as excinfo:
        load_strategy(_write(tmp_path, data))
    assert "B1" in str(excinfo.value.detail)

    data = strategy_to_dict(canonical_strategy())
    data["psi"] = data["psi"][:3]
    with pytest.raises(StrategyFileError):
        load_strategy(_write(tmp_path, data))


def test_load_rejects_non_involution(tmp_path):
    data = strategy_to_dict(canonical_strategy())
    data["A0"] = [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]
    with pytest.raises(InvalidObservableError):
        load_strategy(_write(tmp_path, data))
