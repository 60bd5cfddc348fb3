"""
核の規約による反交換の破れを再現するモジュール。

|M| = √(M²) と、核の上では恒等写像とみなす符号 M/|M| を定義し、
X′_B = (B0+B1)/|B0+B1|、Z′_B = (B0−B1)/|B0−B1| が反交換しない例を構成します。
"""
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from chsh.canonical import pauli_z
from core.config import DEFAULT_TOL, KERNEL_THRESHOLD, REFUTATION_THRESHOLD
from linalg.dense import ComplexMatrix, anticommutator, as_matrix, mat_op_norm
from linalg.spectral import herm_fun, hermitian_eig


@dataclass(frozen=True)
class CounterexampleReport:
    """
    反例の再現結果。

    Attributes
    ----------
    XprimeB, ZprimeB : ComplexMatrix
        (B0+B1)/|B0+B1| と (B0−B1)/|B0−B1|（核の規約つき）
    anticommutator : ComplexMatrix
        {X′_B, Z′_B}
    anticommutator_norm : float
        反交換子の作用素ノルム
    claim_refuted : bool
        anticommutator_norm > 1e-6 なら True
    bias_ceiling : float
        この Bob に対して任意の Alice が達成できるバイアスの上限 ‖B0+B1‖ + ‖B0−B1‖
    """
    XprimeB: ComplexMatrix
    ZprimeB: ComplexMatrix
    anticommutator: ComplexMatrix
    anticommutator_norm: float
    claim_refuted: bool
    bias_ceiling: float


def modulus(M: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ComplexMatrix:
    """
    |M| = √(M²) を返す。

    Raises
    ------
    NotHermitianError
        M がエルミートでない場合
    """
    return herm_fun(M, abs, tol)


def sign_with_kernel_convention(M: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ComplexMatrix:
    """
    M/|M| を返す。核の上では +1（恒等写像）とする。

    |λ| ≤ 1e-10·max(1, ‖M‖) の固有値を核とみなす。結果は常にエルミートな対合。

    Raises
    ------
    NotHermitianError
        M がエルミートでない場合
    """
    M = as_matrix(M)
    threshold = KERNEL_THRESHOLD * max(1.0, mat_op_norm(M))
    return herm_fun(M, lambda x: x / abs(x) if abs(x) > threshold else 1.0, tol)


def _spectral_norm(M: ComplexMatrix) -> float:
    """エルミート行列の作用素ノルム max|λ|。"""
    eigenvalues = hermitian_eig(M).eigenvalues
    return float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0


def mckague_bob_operators(B0: npt.ArrayLike, B1: npt.ArrayLike, tol: float = DEFAULT_TOL) -> CounterexampleReport:
    """
    Bob の観測量の組から X′_B, Z′_B と反交換子を構成する。

    Parameters
    ----------
    B0, B1 : array_like
        Bob の二値オブザーバブル
    tol : float
        エルミート性の許容誤差

    Returns
    -------
    CounterexampleReport
        構成した演算子と反証フラグ
    """
    B0 = as_matrix(B0)
    B1 = as_matrix(B1)
    X_prime = sign_with_kernel_convention(B0 + B1, tol)
    Z_prime = sign_with_kernel_convention(B0 - B1, tol)
    anti = anticommutator(X_prime, Z_prime)
    norm = _spectral_norm(anti)
    return CounterexampleReport(
        XprimeB=X_prime,
        ZprimeB=Z_prime,
        anticommutator=anti,
        anticommutator_norm=norm,
        claim_refuted=norm > REFUTATION_THRESHOLD,
        bias_ceiling=_spectral_norm(B0 + B1) + _spectral_norm(B0 - B1),
    )


def reproduce_counterexample() -> CounterexampleReport:
    """
    B0 = B1 = σ_z の反例を再現する。

    X′_B = σ_z、Z′_B = I、{X′_B, Z′_B} = 2σ_z（ノルム 2）となる。
    """
    Z = pauli_z()
    return mckague_bob_operators(Z, Z)
