"""
抽象CHSH戦略モジュール。

二値オブザーバブルの検証、CHSH演算子、バイアス、Tsirelsonの二乗和恒等式、
反交換子の期待値を提供します。
"""
import math
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from core import logger
from core.config import C_CONSTANT, DEFAULT_TOL, PSI_NORM_TOL, TSIRELSON_BOUND
from core.exceptions import DimensionMismatchError, InvalidObservableError, InvalidStrategyError
from linalg.dense import (
    ComplexMatrix,
    ComplexVector,
    as_matrix,
    as_vector,
    anticommutator,
    dagger,
    expectation,
    identity,
    kron,
    mat_op_norm,
)
from linalg.spectral import hermiticity_residual

OBSERVABLE_NAMES = ("A0", "A1", "B0", "B1")


@dataclass(frozen=True)
class ValidationReport:
    """二値オブザーバブル検証の結果。"""
    hermiticity_residual: float  # ‖M − M†‖
    involution_residual: float   # ‖M² − I‖
    tol: float

    @property
    def valid(self) -> bool:
        """両方の残差が tol 以下かどうか。"""
        return self.hermiticity_residual <= self.tol and self.involution_residual <= self.tol

    def __str__(self) -> str:
        return (f"‖M−M†‖={self.hermiticity_residual:.3e}, "
                f"‖M²−I‖={self.involution_residual:.3e}, tol={self.tol:.1e}")


def validate_binary_observable(M: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ValidationReport:
    """
    行列が二値オブザーバブル（自己共役な対合）かどうかを検証する。

    Parameters
    ----------
    M : array_like
        正方行列
    tol : float
        残差の許容値

    Returns
    -------
    ValidationReport
        エルミート性残差と対合性残差を含むレポート（失敗もレポートで返す）

    Raises
    ------
    DimensionMismatchError
        M が正方行列でない場合
    """
    M = as_matrix(M)
    if M.shape[0] != M.shape[1]:
        raise DimensionMismatchError("square matrix", M.shape)
    return ValidationReport(
        hermiticity_residual=hermiticity_residual(M),
        involution_residual=mat_op_norm(M @ M - identity(M.shape[0])),
        tol=tol,
    )


@dataclass(frozen=True)
class BinaryObservable:
    """検証済みレポートを伴う二値オブザーバブル。"""
    matrix: ComplexMatrix
    report: ValidationReport

    @classmethod
    def from_matrix(cls, M: npt.ArrayLike, tol: float = DEFAULT_TOL) -> "BinaryObservable":
        """行列を検証して BinaryObservable を生成する。"""
        M = as_matrix(M)
        return cls(matrix=M, report=validate_binary_observable(M, tol))

    @property
    def valid(self) -> bool:
        return self.report.valid

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class CHSHStrategy:
    """
    CHSH戦略 S = (|ψ⟩, A0, A1, B0, B1)。

    直接生成した場合は検証レポートを保持するだけで例外を送出しない
    （二乗和恒等式の失敗経路を調べるため）。不変条件を強制するには
    ``CHSHStrategy.create`` を使う。次元の不整合だけは常に例外となる。

    Attributes
    ----------
    psi : ComplexVector
        H_A ⊗ H_B 上の共有状態
    A0, A1 : ComplexMatrix
        Alice の観測量（dim_a 次）
    B0, B1 : ComplexMatrix
        Bob の観測量（dim_b 次）
    tol : float
        観測量検証の許容誤差
    """
    psi: ComplexVector
    A0: ComplexMatrix
    A1: ComplexMatrix
    B0: ComplexMatrix
    B1: ComplexMatrix
    tol: float = DEFAULT_TOL
    reports: dict[str, ValidationReport] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        # 呼び出し側の配列とは共有しない
        psi = as_vector(self.psi).copy()
        matrices = {name: as_matrix(getattr(self, name)).copy() for name in OBSERVABLE_NAMES}

        dim_a = matrices["A0"].shape[0]
        dim_b = matrices["B0"].shape[0]
        for name, dim in (("A0", dim_a), ("A1", dim_a), ("B0", dim_b), ("B1", dim_b)):
            if matrices[name].shape != (dim, dim):
                raise DimensionMismatchError((dim, dim), matrices[name].shape)
        if psi.size != dim_a * dim_b:
            raise DimensionMismatchError(dim_a * dim_b, psi.size)

        if not np.all(np.isfinite(psi)) or not all(np.all(np.isfinite(M)) for M in matrices.values()):
            raise InvalidStrategyError("non-finite entries")

        psi.setflags(write=False)
        object.__setattr__(self, "psi", psi)
        for name, M in matrices.items():
            M.setflags(write=False)
            object.__setattr__(self, name, M)
        object.__setattr__(self, "reports",
                           {name: validate_binary_observable(M, self.tol) for name, M in matrices.items()})

    @classmethod
    def create(
        cls,
        psi: npt.ArrayLike,
        A0: npt.ArrayLike,
        A1: npt.ArrayLike,
        B0: npt.ArrayLike,
        B1: npt.ArrayLike,
        tol: float = DEFAULT_TOL
    ) -> "CHSHStrategy":
        """
        不変条件を検証して戦略を生成する。

        Raises
        ------
        InvalidStrategyError
            ‖ψ‖ が 1 から 1e-10 を超えてずれている場合
        InvalidObservableError
            いずれかの観測量が二値オブザーバブルでない場合
        """
        strategy = cls(psi=psi, A0=A0, A1=A1, B0=B0, B1=B1, tol=tol)
        strategy.validate()
        return strategy

    @property
    def dim_a(self) -> int:
        return self.A0.shape[0]

    @property
    def dim_b(self) -> int:
        return self.B0.shape[0]

    @property
    def psi_norm_residual(self) -> float:
        """|‖ψ‖ − 1|。"""
        return abs(float(np.linalg.norm(self.psi)) - 1.0)

    @property
    def is_valid(self) -> bool:
        """状態が正規化され、4つの観測量がすべて有効かどうか。"""
        return self.psi_norm_residual <= PSI_NORM_TOL and all(r.valid for r in self.reports.values())

    def observable(self, name: str) -> BinaryObservable:
        """名前（"A0" など）に対応する観測量を返す。"""
        return BinaryObservable(matrix=getattr(self, name), report=self.reports[name])

    def validate(self) -> None:
        """不変条件を検証し、満たさなければ例外を送出する。"""
        if self.psi_norm_residual > PSI_NORM_TOL:
            raise InvalidStrategyError(f"‖ψ‖ − 1 = {self.psi_norm_residual:.3e}")
        for name in OBSERVABLE_NAMES:
            observable = self.observable(name)
            if not observable.valid:
                raise InvalidObservableError(name, observable.report)


# =============================================================================
# CHSH演算子とバイアス
# =============================================================================

def chsh_operator(S: CHSHStrategy) -> ComplexMatrix:
    """CHSH = A0⊗B0 + A0⊗B1 + A1⊗B0 − A1⊗B1。"""
    return kron(S.A0, S.B0) + kron(S.A0, S.B1) + kron(S.A1, S.B0) - kron(S.A1, S.B1)


def bias(S: CHSHStrategy) -> float:
    """
    バイアス β(S) = Re⟨ψ|CHSH|ψ⟩ を返す。

    CHSH はエルミートなので虚部は丸め誤差の大きさにとどまる。
    """
    value = expectation(S.psi, chsh_operator(S))
    if abs(value.imag) > 1e-10:
        logger.debug(f"bias: 虚部 {value.imag:.3e} を無視します")
    return value.real


def delta(epsilon: float) -> float:
    """誤差予算 δ(ε) = ε + 4√(cε)、c = 128√2。"""
    return epsilon + 4.0 * math.sqrt(C_CONSTANT * epsilon)


def epsilon_deficit(S: CHSHStrategy) -> float:
    """ε = max(0, 2√2 − β(S))。仮定 β ≥ 2√2 − ε を満たす最小の ε。"""
    return max(0.0, TSIRELSON_BOUND - bias(S))


def tsirelson_sos_residual(S: CHSHStrategy, strict: bool = True) -> float:
    """
    二乗和恒等式 2√2 I − CHSH = (P†P + Q†Q)/√2 の残差を返す。

    P = (A0+A1)/√2 ⊗ I − I ⊗ B0、Q = (A1−A0)/√2 ⊗ I + I ⊗ B1。
    恒等式は A² = I を使うので、二値オブザーバブルでなければ成り立たない。

    Parameters
    ----------
    S : CHSHStrategy
        戦略
    strict : bool
        True の場合、無効な観測量があれば例外を送出する

    Returns
    -------
    float
        ‖2√2 I − CHSH − (P†P + Q†Q)/√2‖（作用素ノルム）

    Raises
    ------
    InvalidObservableError
        strict=True で観測量が検証に失敗した場合
    """
    if strict:
        for name in OBSERVABLE_NAMES:
            if not S.reports[name].valid:
                raise InvalidObservableError(name, S.reports[name])

    sqrt2 = math.sqrt(2.0)
    I_A = identity(S.dim_a)
    I_B = identity(S.dim_b)
    P = kron((S.A0 + S.A1) / sqrt2, I_B) - kron(I_A, S.B0)
    Q = kron((S.A1 - S.A0) / sqrt2, I_B) + kron(I_A, S.B1)
    sos = (dagger(P) @ P + dagger(Q) @ Q) / sqrt2
    lhs = TSIRELSON_BOUND * identity(S.dim_a * S.dim_b) - chsh_operator(S)
    return mat_op_norm(lhs - sos)


def anticommutator_expectation(S: CHSHStrategy) -> tuple[float, float]:
    """
    反交換子の二乗の期待値を返す。

    Returns
    -------
    tuple[float, float]
        (⟨ψ|{A0,A1}² ⊗ I|ψ⟩, ⟨ψ|I ⊗ {B0,B1}²|ψ⟩)
    """
    alice = anticommutator(S.A0, S.A1)
    bob = anticommutator(S.B0, S.B1)
    alice_value = expectation(S.psi, kron(alice @ alice, identity(S.dim_b))).real
    bob_value = expectation(S.psi, kron(identity(S.dim_a), bob @ bob)).real
    return alice_value, bob_value


def conjugate_strategy(S: CHSHStrategy, UA: npt.ArrayLike, UB: npt.ArrayLike) -> CHSHStrategy:
    """
    局所ユニタリで戦略を共役変換する。

    ψ′ = (U_A⊗U_B)ψ、A′ = U_A A U_A†、B′ = U_B B U_B†。
    バイアスは不変。
    """
    UA = as_matrix(UA)
    UB = as_matrix(UB)
    return CHSHStrategy(
        psi=kron(UA, UB) @ S.psi,
        A0=UA @ S.A0 @ dagger(UA),
        A1=UA @ S.A1 @ dagger(UA),
        B0=UB @ S.B0 @ dagger(UB),
        B1=UB @ S.B1 @ dagger(UB),
        tol=S.tol,
    )
