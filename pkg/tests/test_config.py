"""core.config / core.run_config / core.messages のテスト。"""
import json

import numpy as np
import pytest

from core import messages
from core.config import DEFAULT_TOL, TOL_ENV_VAR, get_tolerance_config
from core.exceptions import ConfigError
from core.messages import msg, set_ui_language
from core.run_config import RunConfig, build_run_config, read_config_file


# =============================================================================
# 許容誤差
# =============================================================================

def test_tolerance_default(monkeypatch):
    monkeypatch.delenv(TOL_ENV_VAR, raising=False)
    assert get_tolerance_config().validation_tol == DEFAULT_TOL


def test_tolerance_flag_beats_environment(monkeypatch):
    monkeypatch.setenv(TOL_ENV_VAR, "1e-6")
    assert get_tolerance_config().validation_tol == 1e-6
    assert get_tolerance_config(1e-7).validation_tol == 1e-7


@pytest.mark.parametrize("raw", ["abc", "0", "-1e-9", "nan"])
def test_tolerance_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv(TOL_ENV_VAR, raw)
    with pytest.raises(ConfigError):
        get_tolerance_config()


# =============================================================================
# 格子
# =============================================================================

def test_grid_includes_end_point():
    grid = RunConfig(command="sweep").grid()
    assert len(grid) == 11
    assert grid[0] == 0.0
    assert grid[-1] == pytest.approx(0.1, abs=1e-15)
    np.testing.assert_allclose(np.diff(grid), 0.01, atol=1e-15)


def test_grid_single_point():
    grid = RunConfig(command="sweep", grid_start=0.2, grid_end=0.2).grid()
    np.testing.assert_array_equal(grid, [0.2])


@pytest.mark.parametrize("start, end, step", [(0.1, 0.0, 0.01), (0.0, 0.1, 0.0), (0.0, 0.1, -0.01)])
def test_grid_errors(start, end, step):
    with pytest.raises(ConfigError):
        RunConfig(command="sweep", grid_start=start, grid_end=end, grid_step=step).grid()


def test_grid_points_have_input_precision():
    grid = RunConfig(command="sweep", grid_start=0.0, grid_end=0.3, grid_step=0.05).grid()
    assert [repr(float(x)) for x in grid] == ["0.0", "0.05", "0.1", "0.15", "0.2", "0.25", "0.3"]
    grid = RunConfig(command="sweep", grid_start=0.1, grid_end=0.7, grid_step=0.1).grid()
    assert [repr(float(x)) for x in grid] == ["0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7"]


# =============================================================================
# 実行設定
# =============================================================================

def _write_config(tmp_path, data) -> str:
    path = tmp_path / "config.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_default_strategy_per_command():
    assert build_run_config("verify", {}).strategy == "canonical"
    assert build_run_config("sweep", {}).strategy == "rotated"
    assert build_run_config("optimize", {}).strategy == "random"


def test_flags_override_config_file(tmp_path):
    path = _write_config(tmp_path, {"strategy": "noisy", "magnitude": 0.05, "seed": 4, "dims": [3, 2]})
    config = build_run_config("verify", {"seed": 9, "magnitude": None}, path)
    assert config.strategy == "noisy"
    assert config.magnitude == 0.05
    assert config.seed == 9
    assert config.dims == (3, 2)


def test_config_file_errors(tmp_path):
    with pytest.raises(ConfigError):
        read_config_file(tmp_path / "missing.json")
    with pytest.raises(ConfigError):
        read_config_file(_write_config(tmp_path, {"strategy": "rotated", "bogus": 1}))
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2", encoding="utf-8")
    with pytest.raises(ConfigError):
        read_config_file(bad)
    with pytest.raises(ConfigError):
        build_run_config("verify", {}, _write_config(tmp_path, {"seed": "x"}))


def test_validation_errors(tmp_path):
    with pytest.raises(ConfigError):
        build_run_config("verify", {"out": str(tmp_path / "no_such_dir" / "out.csv")})
    with pytest.raises(ConfigError):
        build_run_config("verify", {"dims": [0, 2]})
    with pytest.raises(ConfigError):
        build_run_config("tsirelson", {"seeds": 0})
    with pytest.raises(ConfigError):
        build_run_config("sweep", {"grid_step": 0.0})


# =============================================================================
# メッセージ
# =============================================================================

def test_messages_language_switch():
    original = messages._ui_lang
    try:
        set_ui_language("ja_JP")
        ja = msg("verify_all_pass")
        set_ui_language("en_US")
        en = msg("verify_all_pass")
        assert ja != en
        assert set(messages.MESSAGES["ja"]) == set(messages.MESSAGES["en"])
    finally:
        messages._ui_lang = original


def test_unknown_message_key_falls_back_to_key():
    assert msg("no_such_message_key") == "no_such_message_key"
