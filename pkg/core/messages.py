"""
UIメッセージ国際化モジュール。

OSのロケールに基づいて日本語/英語のUIメッセージを自動切替する。
"""
import locale
import os

MESSAGES: dict[str, dict[str, str]] = {
    "ja": {
        # ツールタイトル
        "tool_title": "CHSH-LAB - CHSH剛性定理の数値検証ツール",
        "tool_description": "CHSH戦略の抽出等長写像を構成し、剛性定理の各不等式を数値的に検証します。",

        # サブコマンド説明
        "help_verify": "戦略を抽出して定理の全不等式を検証する",
        "help_sweep": "パラメータ格子上で誤差と上界をCSVに出力する",
        "help_counterexample": "核の規約による反交換の破れ（反例）を再現する",
        "help_tsirelson": "Tsirelson二乗和恒等式の残差を調べる",
        "help_optimize": "シーソー最適化で最適に近い戦略を生成する",

        # 処理ログ
        "processing_start": "処理開始: {time}",
        "processing_end": "処理終了: {time}",
        "elapsed_time": "所要時間: {time}",
        "strategy_label": "戦略: {label}",
        "strategy_dims": "  次元: dimA={dim_a}, dimB={dim_b}",
        "strategy_bias": "  バイアス β = {bias:.15f}",
        "strategy_epsilon": "  ε = {epsilon:.6e}, δ = {delta:.6e}",
        "small_eps_outside": "ε = {epsilon:.3e} は小ε領域（ε ≤ {cutoff}）の外です。上界は参考値です。",

        # verify
        "verify_title": "定理の不等式チェック",
        "verify_record": "  [{mark}] {name:<20} 実測 = {actual:.6e}  上界 = {bound:.6e}",
        "verify_all_pass": "すべての不等式が満たされました。",
        "verify_failed": "{count} 個の不等式が満たされませんでした。",
        "verify_degenerate": "ジャンク状態を定義できません（Φ⁺成分の二乗ノルム = {projection:.3e}）。",

        # sweep
        "sweep_title": "スイープ: {kind}（{count} 点）",
        "sweep_point_label": "格子点",
        "sweep_written": "{rows} 行のCSVを書き出しました: {path}",
        "sweep_failures": "{count} 行で上界チェックが失敗しました。",

        # counterexample
        "counterexample_title": "核の規約による反例（B0 = B1 = σ_z）",
        "counterexample_matrix": "  {name} =\n{matrix}",
        "counterexample_norm": "  ‖{{X′_B, Z′_B}}‖ = {norm:.12f}",
        "counterexample_ceiling": "  バイアス上限 ‖B0+B1‖ + ‖B0−B1‖ = {ceiling:.12f}",
        "counterexample_refuted": "主張「{X′_B, Z′_B} = 0」は反証されました。",
        "counterexample_not_refuted": "この構成では反交換子は消えています。",

        # tsirelson
        "tsirelson_title": "Tsirelson二乗和恒等式（{count} 戦略）",
        "tsirelson_residual": "  {label}: 残差 = {residual:.3e}",
        "tsirelson_max": "最大残差 = {residual:.3e}（許容 {tol:.1e}）",

        # optimize
        "optimize_title": "シーソー最適化（dims = {dim_a}×{dim_b}, seed = {seed}）",
        "optimize_step": "  反復 {k:>3}: β = {bias:.15f}",
        "optimize_final": "最終バイアス β = {bias:.15f}（2√2 − β = {gap:.3e}）",
        "optimize_not_converged": "{iters} 回の反復で収束しませんでした（増分 < {tol:.1e} に未達）。",
        "strategy_saved": "戦略ファイルを保存しました: {path}",

        # 設定エラー
        "config_bad_tol": "許容誤差の値が不正です（{source}）: {value}",
        "config_file_not_found": "設定ファイルが見つかりません: {path}",
        "config_file_invalid": "設定ファイルを解析できません: {path}（{detail}）",
        "config_unknown_key": "設定ファイルに未知のキーがあります: {keys}",
        "config_empty_grid": "格子が空です（start = {start}, end = {end}, step = {step}）",
        "config_bad_step": "格子の刻み幅は正でなければなりません: {step}",
        "config_bad_dims": "次元は1以上の整数2つで指定してください: {dims}",
        "config_bad_seeds": "シード数は1以上でなければなりません: {seeds}",
        "config_bad_magnitude": "ノイズの大きさは0以上でなければなりません: {magnitude}",
        "config_bad_max_iters": "最大反復回数は1以上でなければなりません: {max_iters}",
        "config_bad_value": "設定値が不正です: {key} = {value}",
        "config_out_dir_missing": "出力先フォルダが存在しません: {path}",
        "config_out_required": "このコマンドには --out が必要です。",
        "config_unknown_strategy": "未対応の戦略指定です: {spec}（対応: {available}）",
        "config_sweep_strategy": "sweep が対応する戦略は rotated / noisy / seesaw です: {spec}",

        # ロガープレフィックス
        "log_warning": "警告: {message}",
        "log_success": "成功: {message}",
        "log_progress": "処理中: {message} {current}/{total}",

        # 例外メッセージ
        "exception_not_hermitian": "行列がエルミートではありません（‖M − M†‖ = {residual:.3e} > {tol:.1e}）",
        "exception_no_convergence": "固有値計算が収束しませんでした: {detail}",
        "exception_dimension_mismatch": "次元が一致しません（期待: {expected}, 実際: {actual}）",
        "exception_invalid_observable": "{name} は二値オブザーバブルではありません: {report}",
        "exception_invalid_strategy": "CHSH戦略が不正です: {detail}",
        "exception_degenerate_junk": "Φ⁺成分の二乗ノルム {projection:.3e} がしきい値 {threshold:.1e} 以下のため、ジャンク状態を定義できません",
        "exception_strategy_file": "戦略ファイルの処理に失敗しました: {path}（{detail}）",
        "unexpected_error": "予期せぬエラー: {error}",
    },
    "en": {
        # Tool title
        "tool_title": "CHSH-LAB - numerical verification of robust CHSH rigidity",
        "tool_description": "Builds extraction isometries for CHSH strategies and checks every inequality of the rigidity theorem numerically.",

        # Subcommand help
        "help_verify": "extract a strategy and check every theorem inequality",
        "help_sweep": "write measured errors and bounds over a parameter grid to CSV",
        "help_counterexample": "reproduce the kernel-convention anticommutation counterexample",
        "help_tsirelson": "check the Tsirelson sum-of-squares identity residual",
        "help_optimize": "produce a near-optimal strategy by see-saw optimization",

        # Processing log
        "processing_start": "Processing started: {time}",
        "processing_end": "Processing finished: {time}",
        "elapsed_time": "Elapsed time: {time}",
        "strategy_label": "Strategy: {label}",
        "strategy_dims": "  dims: dimA={dim_a}, dimB={dim_b}",
        "strategy_bias": "  bias β = {bias:.15f}",
        "strategy_epsilon": "  ε = {epsilon:.6e}, δ = {delta:.6e}",
        "small_eps_outside": "ε = {epsilon:.3e} lies outside the small-ε regime (ε ≤ {cutoff}); bounds are informational.",

        # verify
        "verify_title": "Theorem inequality check",
        "verify_record": "  [{mark}] {name:<20} actual = {actual:.6e}  bound = {bound:.6e}",
        "verify_all_pass": "All inequalities satisfied.",
        "verify_failed": "{count} inequalities not satisfied.",
        "verify_degenerate": "Junk state undefined (squared norm of the Φ⁺ component = {projection:.3e}).",

        # sweep
        "sweep_title": "Sweep: {kind} ({count} points)",
        "sweep_point_label": "grid point",
        "sweep_written": "Wrote CSV with {rows} rows: {path}",
        "sweep_failures": "Bound check failed on {count} rows.",

        # counterexample
        "counterexample_title": "Kernel-convention counterexample (B0 = B1 = σ_z)",
        "counterexample_matrix": "  {name} =\n{matrix}",
        "counterexample_norm": "  ‖{{X′_B, Z′_B}}‖ = {norm:.12f}",
        "counterexample_ceiling": "  bias ceiling ‖B0+B1‖ + ‖B0−B1‖ = {ceiling:.12f}",
        "counterexample_refuted": "The claim {X′_B, Z′_B} = 0 is refuted.",
        "counterexample_not_refuted": "The anticommutator vanishes for this configuration.",

        # tsirelson
        "tsirelson_title": "Tsirelson sum-of-squares identity ({count} strategies)",
        "tsirelson_residual": "  {label}: residual = {residual:.3e}",
        "tsirelson_max": "max residual = {residual:.3e} (tolerance {tol:.1e})",

        # optimize
        "optimize_title": "See-saw optimization (dims = {dim_a}x{dim_b}, seed = {seed})",
        "optimize_step": "  iteration {k:>3}: β = {bias:.15f}",
        "optimize_final": "final bias β = {bias:.15f} (2√2 − β = {gap:.3e})",
        "optimize_not_converged": "Not converged after {iters} iterations (gain never fell below {tol:.1e}).",
        "strategy_saved": "Saved strategy file: {path}",

        # Config errors
        "config_bad_tol": "Invalid tolerance value ({source}): {value}",
        "config_file_not_found": "Config file not found: {path}",
        "config_file_invalid": "Cannot parse config file: {path} ({detail})",
        "config_unknown_key": "Unknown keys in config file: {keys}",
        "config_empty_grid": "Empty grid (start = {start}, end = {end}, step = {step})",
        "config_bad_step": "Grid step must be positive: {step}",
        "config_bad_dims": "Dimensions must be two integers >= 1: {dims}",
        "config_bad_seeds": "Number of seeds must be >= 1: {seeds}",
        "config_bad_magnitude": "Noise magnitude must be >= 0: {magnitude}",
        "config_bad_max_iters": "Maximum iterations must be >= 1: {max_iters}",
        "config_bad_value": "Invalid config value: {key} = {value}",
        "config_out_dir_missing": "Output directory does not exist: {path}",
        "config_out_required": "This command requires --out.",
        "config_unknown_strategy": "Unsupported strategy: {spec} (available: {available})",
        "config_sweep_strategy": "sweep supports rotated / noisy / seesaw strategies: {spec}",

        # Logger prefixes
        "log_warning": "Warning: {message}",
        "log_success": "Success: {message}",
        "log_progress": "Processing: {message} {current}/{total}",

        # Exception messages
        "exception_not_hermitian": "Matrix is not Hermitian (‖M − M†‖ = {residual:.3e} > {tol:.1e})",
        "exception_no_convergence": "Eigenvalue computation did not converge: {detail}",
        "exception_dimension_mismatch": "Dimension mismatch (expected: {expected}, actual: {actual})",
        "exception_invalid_observable": "{name} is not a binary observable: {report}",
        "exception_invalid_strategy": "Invalid CHSH strategy: {detail}",
        "exception_degenerate_junk": "Squared norm {projection:.3e} of the Φ⁺ component is at or below {threshold:.1e}; the junk state is undefined",
        "exception_strategy_file": "Strategy file error: {path} ({detail})",
        "unexpected_error": "Unexpected error: {error}",
    },
}


# OS言語判定
def _detect_ui_language() -> str:
    """OSのロケールから UI 言語を判定する。"""
    # 環境変数をチェック（LC_ALL, LC_MESSAGES, LANG）
    # C / C.UTF-8 / POSIX はデフォルト値のため言語指定なしとして除外
    for env_var in ("LC_ALL", "LC_MESSAGES", "LANG"):
        value = os.environ.get(env_var, "")
        if value and not value.startswith("C") and value != "POSIX":
            return "ja" if value.startswith("ja") else "en"
    # フォールバック: locale.getlocale()
    # Windows では "Japanese_Japan" のように返るため、大文字小文字を無視して判定
    try:
        loc = locale.getlocale()[0] or ""
    except ValueError:
        loc = ""
    return "ja" if loc.lower().startswith("ja") else "en"


_ui_lang = _detect_ui_language()


def set_ui_language(lang_code: str) -> None:
    """
    UIメッセージ言語を手動で設定する。

    Parameters
    ----------
    lang_code : str
        言語コード（例: "ja_JP", "en_US"）。
        "ja" で始まる場合は日本語、それ以外は英語を使用する。
    """
    global _ui_lang
    _ui_lang = "ja" if lang_code.startswith("ja") else "en"


def msg(key: str, /, **kwargs) -> str:
    """
    指定キーのUIメッセージを現在のロケールに応じて返す。

    Parameters
    ----------
    key : str
        メッセージキー
    **kwargs
        メッセージ内のプレースホルダーに渡す値

    Returns
    -------
    str
        ロケールに応じたメッセージ文字列
    """
    template = MESSAGES[_ui_lang].get(key, key)
    if kwargs:
        return template.format(**kwargs)
    return template
