"""
CHSH剛性検証用のカスタム例外クラス。

線形代数・戦略検証・抽出・設定の各段階で発生するエラーを明確に分類し、
CLIの終了コードへの対応付けを可能にします。
"""
from core.messages import msg


class ChshLabError(Exception):
    """検証ラボの基底例外クラス。"""
    pass


class NotHermitianError(ChshLabError):
    """エルミート行列を要求する演算に非エルミート行列が渡された場合の例外。"""

    def __init__(self, residual: float, tol: float):
        self.residual = residual
        self.tol = tol
        super().__init__(msg("exception_not_hermitian", residual=residual, tol=tol))


class NoConvergenceError(ChshLabError):
    """固有値ソルバーなどの反復計算が収束しなかった場合の例外。"""

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(msg("exception_no_convergence", detail=detail))


class DimensionMismatchError(ChshLabError):
    """行列・ベクトルの次元が合わない場合の例外。"""

    def __init__(self, expected: object, actual: object):
        self.expected = expected
        self.actual = actual
        super().__init__(msg("exception_dimension_mismatch", expected=expected, actual=actual))


class InvalidObservableError(ChshLabError):
    """二値オブザーバブル（自己共役な対合）でない行列が渡された場合の例外。"""

    def __init__(self, name: str, report: object = None):
        self.name = name
        self.report = report
        super().__init__(msg("exception_invalid_observable", name=name, report=report))


class InvalidStrategyError(ChshLabError):
    """CHSH戦略の不変条件（状態の正規化・次元）が満たされない場合の例外。"""

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(msg("exception_invalid_strategy", detail=detail))


class DegenerateJunkError(ChshLabError):
    """抽出状態のΦ⁺成分が小さすぎてジャンク状態を定義できない場合の例外。"""

    def __init__(self, projection_sq_norm: float, threshold: float):
        self.projection_sq_norm = projection_sq_norm
        self.threshold = threshold
        super().__init__(msg("exception_degenerate_junk",
                             projection=projection_sq_norm, threshold=threshold))


class ConfigError(ChshLabError):
    """コマンドライン引数・設定ファイルの内容が不正な場合の例外。"""

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


class StrategyFileError(ChshLabError):
    """戦略ファイルの読み書きに失敗した場合の例外。"""

    def __init__(self, path: str, detail: str):
        self.path = path
        self.detail = detail
        super().__init__(msg("exception_strategy_file", path=path, detail=detail))
