"""
状態・観測量の抽出と定理の不等式チェックモジュール。

Ψ := regSwap((V_A⊗V_B)ψ) を構成し、Φ⁺ ⊗ ジャンク状態との距離、
各観測量の抽出誤差、証明中の中間不等式をすべて数値的に評価します。
"""
import math
from dataclasses import dataclass

import numpy as np

from chsh.canonical import bell_basis_matrix, bell_state, h_prime, hadamard, k_operator, pauli_x, pauli_z
from chsh.model import (
    CHSHStrategy,
    anticommutator_expectation,
    bias,
    chsh_operator,
    delta,
    epsilon_deficit,
)
from core import logger
from core.config import BOUND_SLACK, C_CONSTANT, JUNK_THRESHOLD, SMALL_EPS_CUTOFF, TSIRELSON_BOUND
from core.exceptions import DegenerateJunkError
from extraction.isometry import build_va, build_vb, reg_swap
from linalg.dense import ComplexMatrix, ComplexVector, identity, kron, mat_op_norm, vec_norm


@dataclass(frozen=True)
class ExtractionResult:
    """
    抽出の結果。

    Attributes
    ----------
    epsilon : float
        バイアスの不足分 ε
    delta : float
        δ = ε + 4√(cε)
    Psi : ComplexVector
        並べ替え後の抽出状態（4·dimA·dimB 次元）
    junk : ComplexVector
        正規化したΦ⁺ブロック成分（dimA·dimB 次元）
    projection_sq_norm : float
        Φ⁺ブロックの二乗ノルム
    state_error : float
        ‖Ψ − Φ⁺⊗junk‖
    a0_error, a1_error, b0_error, b1_error : float
        各観測量の抽出誤差（ベクトル差のノルム）
    k_expectation : float
        Re⟨Ψ|(K⊗I)|Ψ⟩
    phys_ideal_gap : float
        ‖(K⊗I)Ψ − regSwap((V_A⊗V_B)·CHSH·ψ)‖
    """
    epsilon: float
    delta: float
    Psi: ComplexVector
    junk: ComplexVector
    projection_sq_norm: float
    state_error: float
    a0_error: float
    a1_error: float
    b0_error: float
    b1_error: float
    k_expectation: float
    phys_ideal_gap: float
    # 補助的な診断値
    bias: float
    alice_anticomm: float
    bob_anticomm: float
    a0_intertwining: float
    b0_intertwining: float
    a1_vector_residual: float
    b1_vector_residual: float
    bell_weights: tuple[float, float, float, float]


@dataclass(frozen=True)
class BoundRecord:
    """不等式1本分の比較結果。"""
    name: str
    actual: float
    bound: float
    satisfied: bool
    small_eps_regime: bool


@dataclass(frozen=True)
class BoundReport:
    """定理の不等式チェック全体の結果。"""
    epsilon: float
    delta: float
    records: tuple[BoundRecord, ...]

    @property
    def all_satisfied(self) -> bool:
        return all(record.satisfied for record in self.records)

    @property
    def small_eps_regime(self) -> bool:
        return all(record.small_eps_regime for record in self.records)

    def failures(self) -> list[BoundRecord]:
        """満たされなかった不等式の一覧。"""
        return [record for record in self.records if not record.satisfied]

    def record(self, name: str) -> BoundRecord:
        """名前で記録を取り出す。"""
        for record in self.records:
            if record.name == name:
                return record
        raise KeyError(name)


# =============================================================================
# 境界値（εの閉形式）
# =============================================================================

def anticomm_bound(epsilon: float) -> float:
    """反交換子の期待値の上界 cε。"""
    return C_CONSTANT * epsilon


def intertwining_bound(epsilon: float) -> float:
    """X / H′ の近似インタートワイニングの上界 √(cε)。"""
    return math.sqrt(C_CONSTANT * epsilon)


def state_bound(epsilon: float) -> float:
    """状態誤差と A0 / B0 誤差の上界 √(δ/√2)。"""
    return math.sqrt(delta(epsilon) / math.sqrt(2.0))


def second_operator_bound(epsilon: float) -> float:
    """A1 / B1 誤差の上界 √(cε) + √(δ/√2)。"""
    return intertwining_bound(epsilon) + state_bound(epsilon)


# =============================================================================
# 抽出
# =============================================================================

def _junk_component(Psi: ComplexVector, n: int) -> tuple[ComplexVector, tuple[float, float, float, float]]:
    """
    先頭の量子ビット対を Bell 基底に取り替え、各ブロックを返す。

    Returns
    -------
    tuple
        (Φ⁺ブロック（未正規化）, 4ブロックの二乗ノルム)
    """
    coords = kron(bell_basis_matrix().conj().T, identity(n)) @ Psi
    blocks = coords.reshape(4, n)
    weights = tuple(float(np.vdot(block, block).real) for block in blocks)
    return blocks[0].copy(), weights


def extract(S: CHSHStrategy) -> ExtractionResult:
    """
    戦略から EPR 対とジャンク状態を抽出し、各誤差を計算する。

    Parameters
    ----------
    S : CHSHStrategy
        有効な CHSH 戦略

    Returns
    -------
    ExtractionResult
        抽出結果

    Raises
    ------
    InvalidStrategyError, InvalidObservableError
        S が不変条件を満たさない場合
    DegenerateJunkError
        Φ⁺ブロックの二乗ノルムが 1e-12 以下の場合
    """
    S.validate()
    dim_a, dim_b = S.dim_a, S.dim_b
    n = dim_a * dim_b
    I_A, I_B, I_n = identity(dim_a), identity(dim_b), identity(n)

    VA = build_va(S.A0, S.A1, S.tol)
    VB = build_vb(S.B0, S.B1, S.tol)
    W = reg_swap(dim_a, dim_b) @ kron(VA, VB)

    Psi = W @ S.psi
    block, weights = _junk_component(Psi, n)
    projection_sq_norm = weights[0]
    if projection_sq_norm <= JUNK_THRESHOLD:
        raise DegenerateJunkError(projection_sq_norm, JUNK_THRESHOLD)
    junk = block / math.sqrt(projection_sq_norm)
    target = kron(bell_state("phi-plus").reshape(-1, 1), junk.reshape(-1, 1)).ravel()

    def operator_error(physical: ComplexMatrix, ideal: ComplexMatrix) -> float:
        return vec_norm(W @ (physical @ S.psi) - kron(ideal, I_n) @ target)

    I2 = identity(2)
    K_I = kron(k_operator(), I_n)
    phys = W @ (chsh_operator(S) @ S.psi)

    epsilon = epsilon_deficit(S)
    alice_anticomm, bob_anticomm = anticommutator_expectation(S)
    Z_I = kron(pauli_z(), I_A)
    H_I = kron(hadamard(), I_B)
    X_I = kron(pauli_x(), I_A)
    Hp_I = kron(h_prime(), I_B)

    result = ExtractionResult(
        epsilon=epsilon,
        delta=delta(epsilon),
        Psi=Psi,
        junk=junk,
        projection_sq_norm=projection_sq_norm,
        state_error=vec_norm(Psi - target),
        a0_error=operator_error(kron(S.A0, I_B), kron(pauli_z(), I2)),
        a1_error=operator_error(kron(S.A1, I_B), kron(pauli_x(), I2)),
        b0_error=operator_error(kron(I_A, S.B0), kron(I2, hadamard())),
        b1_error=operator_error(kron(I_A, S.B1), kron(I2, h_prime())),
        k_expectation=float(np.vdot(Psi, K_I @ Psi).real),
        phys_ideal_gap=vec_norm(K_I @ Psi - phys),
        bias=bias(S),
        alice_anticomm=alice_anticomm,
        bob_anticomm=bob_anticomm,
        a0_intertwining=mat_op_norm(Z_I @ VA - VA @ S.A0),
        b0_intertwining=mat_op_norm(H_I @ VB - VB @ S.B0),
        a1_vector_residual=vec_norm(kron(X_I @ VA - VA @ S.A1, I_B) @ S.psi),
        b1_vector_residual=vec_norm(kron(I_A, Hp_I @ VB - VB @ S.B1) @ S.psi),
        bell_weights=weights,
    )
    logger.debug(f"extract: dims=({dim_a},{dim_b}), ε={epsilon:.3e}, "
                 f"‖Φ⁺ブロック‖²={projection_sq_norm:.6f}, 状態誤差={result.state_error:.3e}")
    return result


def verify_theorem(
    S: CHSHStrategy,
    slack: float = BOUND_SLACK,
    small_eps_cutoff: float = SMALL_EPS_CUTOFF,
    result: ExtractionResult | None = None
) -> BoundReport:
    """
    証明中の各不等式を ε = epsilon_deficit(S) で評価した閉形式の上界と比較する。

    下界の不等式は不足分として記録する（k_expectation_lb の実測値は
    2√2 − Re⟨Ψ|(K⊗I)|Ψ⟩、projection_lb の実測値は 1 − ‖Φ⁺ブロック‖²）。

    Parameters
    ----------
    S : CHSHStrategy
        有効な CHSH 戦略
    slack : float
        比較の余裕（actual ≤ bound + slack で満たされたとみなす）
    small_eps_cutoff : float
        ε がこれ以下なら小ε領域とみなす
    result : ExtractionResult | None
        計算済みの抽出結果（None なら extract(S) を実行）

    Returns
    -------
    BoundReport
        12本の不等式の記録

    Raises
    ------
    DegenerateJunkError
        ジャンク状態を定義できない場合
    """
    if result is None:
        result = extract(S)
    eps = result.epsilon
    dlt = result.delta
    in_regime = eps <= small_eps_cutoff

    comparisons = (
        ("alice_anticomm", result.alice_anticomm, anticomm_bound(eps)),
        ("bob_anticomm", result.bob_anticomm, anticomm_bound(eps)),
        ("a1_intertwining", result.a1_vector_residual, intertwining_bound(eps)),
        ("b1_intertwining", result.b1_vector_residual, intertwining_bound(eps)),
        ("phys_ideal_gap", result.phys_ideal_gap, 4.0 * intertwining_bound(eps)),
        ("k_expectation_lb", TSIRELSON_BOUND - result.k_expectation, dlt),
        ("projection_lb", 1.0 - result.projection_sq_norm, dlt / TSIRELSON_BOUND),
        ("state_error", result.state_error, state_bound(eps)),
        ("a0_error", result.a0_error, state_bound(eps)),
        ("a1_error", result.a1_error, second_operator_bound(eps)),
        ("b0_error", result.b0_error, state_bound(eps)),
        ("b1_error", result.b1_error, second_operator_bound(eps)),
    )
    records = tuple(
        BoundRecord(name=name, actual=actual, bound=bound,
                    satisfied=actual <= bound + slack, small_eps_regime=in_regime)
        for name, actual, bound in comparisons
    )
    report = BoundReport(epsilon=eps, delta=dlt, records=records)
    for record in report.failures():
        logger.debug(f"verify_theorem: {record.name} 実測 {record.actual:.6e} > 上界 {record.bound:.6e}")
    return report
