"""
標準的な2量子ビットCHSHモデルモジュール。

Pauli行列、H = (Z+X)/√2、H′ = (Z−X)/√2、回転 R、Bell状態、理想演算子 K を提供する。
基底の順序は |00⟩, |01⟩, |10⟩, |11⟩（左の因子が第1テンソルスロット）に固定する。
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import expm

from linalg.dense import ComplexMatrix, ComplexVector, kron

_SQRT2 = math.sqrt(2.0)


class BellState(Enum):
    """Bell基底の4状態。"""
    PHI_PLUS = "phi-plus"
    PHI_MINUS = "phi-minus"
    PSI_PLUS = "psi-plus"
    PSI_MINUS = "psi-minus"


# =============================================================================
# 1量子ビットのゲートと状態
# =============================================================================

def pauli_z() -> ComplexMatrix:
    """σ_z。"""
    return np.array([[1, 0], [0, -1]], dtype=np.complex128)


def pauli_x() -> ComplexMatrix:
    """σ_x。"""
    return np.array([[0, 1], [1, 0]], dtype=np.complex128)


def pauli_y() -> ComplexMatrix:
    """σ_y。"""
    return np.array([[0, -1j], [1j, 0]], dtype=np.complex128)


def hadamard() -> ComplexMatrix:
    """H = (Z+X)/√2。

    回路のアダマールゲートと観測量 H は同じ行列なので、ここで一度だけ定義する。
    """
    return (pauli_z() + pauli_x()) / _SQRT2


def h_prime() -> ComplexMatrix:
    """H′ = (Z−X)/√2。"""
    return (pauli_z() - pauli_x()) / _SQRT2


def rotation_r() -> ComplexMatrix:
    """
    R = sin(π/8) X + cos(π/8) Z を返す。

    実対称な対合（R² = I）で、RZR† = H、RXR† = H′ を満たす。
    """
    return math.sin(math.pi / 8) * pauli_x() + math.cos(math.pi / 8) * pauli_z()


def y_rotation(theta: float) -> ComplexMatrix:
    """Y軸まわりの回転 exp(−iθY/2)。"""
    return expm(-0.5j * theta * pauli_y())


def basis_ket(index: int, dim: int) -> ComplexVector:
    """計算基底ベクトル |index⟩（dim次元）。"""
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return v


def ket0() -> ComplexVector:
    """|0⟩。"""
    return basis_ket(0, 2)


def ket1() -> ComplexVector:
    """|1⟩。"""
    return basis_ket(1, 2)


def aux_state() -> ComplexVector:
    """Bob側の補助量子ビット |aux⟩ = R|0⟩ = (cos(π/8), sin(π/8))。"""
    return rotation_r() @ ket0()


# =============================================================================
# Bell状態と K
# =============================================================================

_BELL_COORDS: dict[BellState, tuple[float, float, float, float]] = {
    BellState.PHI_PLUS: (1.0, 0.0, 0.0, 1.0),
    BellState.PHI_MINUS: (1.0, 0.0, 0.0, -1.0),
    BellState.PSI_PLUS: (0.0, 1.0, 1.0, 0.0),
    BellState.PSI_MINUS: (0.0, 1.0, -1.0, 0.0),
}


def bell_state(kind: BellState | str) -> ComplexVector:
    """
    Bell状態を計算基底の座標で返す。

    Parameters
    ----------
    kind : BellState | str
        状態の種類（"phi-plus" などの文字列も可）

    Returns
    -------
    ComplexVector
        4次元の単位ベクトル
    """
    kind = BellState(kind)
    return np.array(_BELL_COORDS[kind], dtype=np.complex128) / _SQRT2


def bell_basis_matrix() -> ComplexMatrix:
    """列が Φ⁺, Φ⁻, Ψ⁺, Ψ⁻ のユニタリ行列。"""
    return np.column_stack([bell_state(kind) for kind in BellState])


def k_operator() -> ComplexMatrix:
    """理想CHSH演算子 K = √2 (Z⊗Z + X⊗X)。"""
    Z = pauli_z()
    X = pauli_x()
    return _SQRT2 * (kron(Z, Z) + kron(X, X))


@dataclass(frozen=True)
class CanonicalGates:
    """標準モデルのゲートと状態の一式。"""
    Z: ComplexMatrix
    X: ComplexMatrix
    H: ComplexMatrix
    Hprime: ComplexMatrix
    R: ComplexMatrix
    ket0: ComplexVector
    ket1: ComplexVector
    aux: ComplexVector
    bell: tuple[ComplexVector, ComplexVector, ComplexVector, ComplexVector]

    @property
    def hadamard_gate(self) -> ComplexMatrix:
        """U_A の回路に現れるアダマールゲート（観測量 H と同一）。"""
        return self.H


def canonical_gates() -> CanonicalGates:
    """標準モデルのゲート一式を生成する。"""
    return CanonicalGates(
        Z=pauli_z(),
        X=pauli_x(),
        H=hadamard(),
        Hprime=h_prime(),
        R=rotation_r(),
        ket0=ket0(),
        ket1=ket1(),
        aux=aux_state(),
        bell=tuple(bell_state(kind) for kind in BellState),
    )
