"""
シーソー最適化モジュール。

状態、Alice の観測量、Bob の観測量を交互に最適化してバイアスを単調に増加させ、
最適に近い戦略を生成します。
"""
from dataclasses import dataclass

import numpy as np

from chsh.model import CHSHStrategy, bias, chsh_operator
from core import logger
from core.config import SEESAW_MAX_ITERS, SEESAW_TOL
from core.messages import msg
from linalg.dense import ComplexMatrix, dagger, identity, kron, partial_trace_A, partial_trace_B
from linalg.spectral import herm_fun, hermitian_eig, signum


@dataclass(frozen=True)
class SeesawTrace:
    """
    シーソー最適化の履歴。

    Attributes
    ----------
    biases : tuple[float, ...]
        初期バイアスと各反復後のバイアス（非減少）
    converged : bool
        バイアスの増分が tol を下回って停止したかどうか
    final : CHSHStrategy
        最終的な戦略
    """
    biases: tuple[float, ...]
    converged: bool
    final: CHSHStrategy

    @property
    def iterations(self) -> int:
        """実行した反復回数。"""
        return len(self.biases) - 1

    @property
    def final_bias(self) -> float:
        return self.biases[-1]


def _sign_of(M: ComplexMatrix) -> ComplexMatrix:
    """エルミート化した M の符号（ゼロ固有値は +1）。"""
    return herm_fun((M + dagger(M)) / 2.0, signum)


def _state_step(S: CHSHStrategy) -> CHSHStrategy:
    """ψ を CHSH 演算子の最大固有値の固有ベクトルに置き換える。"""
    psi = hermitian_eig(chsh_operator(S)).top_vector()
    return CHSHStrategy(psi=psi, A0=S.A0, A1=S.A1, B0=S.B0, B1=S.B1, tol=S.tol)


def _alice_step(S: CHSHStrategy) -> CHSHStrategy:
    """
    Bob と状態を固定して Alice の観測量を最適化する。

    β = Tr[A0 M0] + Tr[A1 M1]、M0 = Tr_B((I⊗(B0+B1))ρ)、M1 = Tr_B((I⊗(B0−B1))ρ)。
    """
    rho = np.outer(S.psi, S.psi.conj())
    I_A = identity(S.dim_a)
    M0 = partial_trace_B(kron(I_A, S.B0 + S.B1) @ rho, S.dim_a, S.dim_b)
    M1 = partial_trace_B(kron(I_A, S.B0 - S.B1) @ rho, S.dim_a, S.dim_b)
    return CHSHStrategy(psi=S.psi, A0=_sign_of(M0), A1=_sign_of(M1), B0=S.B0, B1=S.B1, tol=S.tol)


def _bob_step(S: CHSHStrategy) -> CHSHStrategy:
    """Alice と状態を固定して Bob の観測量を最適化する。"""
    rho = np.outer(S.psi, S.psi.conj())
    I_B = identity(S.dim_b)
    N0 = partial_trace_A(kron(S.A0 + S.A1, I_B) @ rho, S.dim_a, S.dim_b)
    N1 = partial_trace_A(kron(S.A0 - S.A1, I_B) @ rho, S.dim_a, S.dim_b)
    return CHSHStrategy(psi=S.psi, A0=S.A0, A1=S.A1, B0=_sign_of(N0), B1=_sign_of(N1), tol=S.tol)


def seesaw_optimize(
    S0: CHSHStrategy,
    max_iters: int = SEESAW_MAX_ITERS,
    tol: float = SEESAW_TOL
) -> SeesawTrace:
    """
    シーソー最適化を実行する。

    1回の反復で 状態 → Alice → Bob の順に更新する。各半ステップはその変数について
    厳密な最大化なのでバイアスは減少しない。反復の増分が tol 未満になったら収束とする。

    Parameters
    ----------
    S0 : CHSHStrategy
        有効な初期戦略
    max_iters : int
        最大反復回数
    tol : float
        収束判定に使うバイアス増分の閾値

    Returns
    -------
    SeesawTrace
        バイアスの履歴と最終戦略。max_iters 回で収束しなくても履歴は返す
        （converged = False、警告を出力）

    Raises
    ------
    InvalidStrategyError, InvalidObservableError
        S0 が不変条件を満たさない場合
    """
    S0.validate()
    S = S0
    biases = [bias(S)]
    converged = False

    for k in range(1, max_iters + 1):
        S = _bob_step(_alice_step(_state_step(S)))
        current = bias(S)
        gain = current - biases[-1]
        biases.append(current)
        logger.debug(f"seesaw: 反復 {k}, β = {current:.15f}, 増分 = {gain:.3e}")
        if gain < tol:
            converged = True
            break

    if not converged:
        logger.warning(msg("optimize_not_converged", iters=max_iters, tol=tol))
    S.validate()
    return SeesawTrace(biases=tuple(biases), converged=converged, final=S)
