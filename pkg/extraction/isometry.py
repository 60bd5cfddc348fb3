"""
抽出等長写像モジュール。

制御ゲート、U_A / U_B、等長写像 V_A / V_B、テンソル因子の並べ替え regSwap を構成します。
V = U(|anc⟩ ⊗ I) の形をとり、観測量が反交換しなくてもユニタリ性は構成から保証されます。
"""
import numpy as np
import numpy.typing as npt

from chsh.canonical import aux_state, hadamard, ket0, rotation_r
from chsh.model import BinaryObservable
from core.config import DEFAULT_TOL
from core.exceptions import DimensionMismatchError, InvalidObservableError
from linalg.dense import ComplexMatrix, as_matrix, as_vector, identity, kron

# 制御量子ビットの射影 |0⟩⟨0|, |1⟩⟨1|
_PROJ0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
_PROJ1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)


def _require_pair(first: npt.ArrayLike, second: npt.ArrayLike, names: tuple[str, str],
                  tol: float) -> tuple[ComplexMatrix, ComplexMatrix]:
    """観測量の組を検証して行列として返す。"""
    M0 = as_matrix(first)
    M1 = as_matrix(second)
    if M0.shape != M1.shape:
        raise DimensionMismatchError(M0.shape, M1.shape)
    for name, M in zip(names, (M0, M1)):
        observable = BinaryObservable.from_matrix(M, tol)
        if not observable.valid:
            raise InvalidObservableError(name, observable.report)
    return M0, M1


# =============================================================================
# 制御ゲートと回路
# =============================================================================

def control(A: npt.ArrayLike) -> ComplexMatrix:
    """
    制御ゲート C_A = |0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ A を返す。

    ブロック行列 [[I, 0], [0, A]] に等しく、A がユニタリならユニタリ。

    Raises
    ------
    DimensionMismatchError
        A が正方行列でない場合
    """
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise DimensionMismatchError("square matrix", A.shape)
    return kron(_PROJ0, identity(A.shape[0])) + kron(_PROJ1, A)


def embed(anc: npt.ArrayLike, d: int) -> ComplexMatrix:
    """補助状態を先頭に付加する (2d)×d 行列 |anc⟩ ⊗ I_d。"""
    anc = as_vector(anc).reshape(-1, 1)
    return kron(anc, identity(d))


def unitary_ua(A0: npt.ArrayLike, A1: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ComplexMatrix:
    """
    Alice側の回路 U_A = C_{A1} (H⊗I) C_{A0} (H⊗I) を返す。

    右端の因子が最初に作用する。すなわち (H⊗I)、C_{A0}、(H⊗I)、C_{A1} の順。

    Parameters
    ----------
    A0, A1 : array_like
        同じ次元 d の二値オブザーバブル
    tol : float
        観測量検証の許容誤差

    Returns
    -------
    ComplexMatrix
        2d 次のユニタリ行列

    Raises
    ------
    InvalidObservableError
        A0 または A1 が二値オブザーバブルでない場合
    """
    A0, A1 = _require_pair(A0, A1, ("A0", "A1"), tol)
    H_I = kron(hadamard(), identity(A0.shape[0]))
    return control(A1) @ H_I @ control(A0) @ H_I


def unitary_ub(B0: npt.ArrayLike, B1: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ComplexMatrix:
    """Bob側の回路 U_B = (R⊗I) C_{B1} (H⊗I) C_{B0} (H⊗I) (R†⊗I) を返す。"""
    B0, B1 = _require_pair(B0, B1, ("B0", "B1"), tol)
    R_I = kron(rotation_r(), identity(B0.shape[0]))
    # R は実対称なので R† = R
    return R_I @ unitary_ua(B0, B1, tol) @ R_I.conj().T


def build_va(A0: npt.ArrayLike, A1: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ComplexMatrix:
    """
    Alice の抽出等長写像 V_A = U_A(|0⟩ ⊗ I) を返す。

    (Z⊗I)V_A = V_A A0 が任意の二値オブザーバブルで厳密に成り立つ。
    """
    A0 = as_matrix(A0)
    return unitary_ua(A0, A1, tol) @ embed(ket0(), A0.shape[0])


def build_vb(B0: npt.ArrayLike, B1: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ComplexMatrix:
    """
    Bob の抽出等長写像 V_B = U_B(|aux⟩ ⊗ I)、|aux⟩ = R|0⟩ を返す。

    (H⊗I)V_B = V_B B0 が任意の二値オブザーバブルで厳密に成り立つ。
    """
    B0 = as_matrix(B0)
    return unitary_ub(B0, B1, tol) @ embed(aux_state(), B0.shape[0])


def build_vb_symmetrized(B0: npt.ArrayLike, B1: npt.ArrayLike, tol: float = DEFAULT_TOL) -> ComplexMatrix:
    """
    Alice と同じ回路で作った Bob の等長写像 U_A(B0, B1)(|0⟩ ⊗ I) を返す。

    build_vb(B0, B1) = (R⊗I) build_vb_symmetrized(B0, B1) が厳密に成り立ち、
    こちらは (Z⊗I)V = V B0 を満たす。
    """
    return build_va(B0, B1, tol)


# =============================================================================
# regSwap
# =============================================================================

def _regroup_permutation(dim_a: int, dim_b: int) -> npt.NDArray[np.intp]:
    """出力位置 (q_a, q_b, h_a, h_b) ごとの入力インデックス。"""
    n = 4 * dim_a * dim_b
    return np.arange(n).reshape(2, dim_a, 2, dim_b).transpose(0, 2, 1, 3).reshape(n)


def reg_swap(dim_a: int, dim_b: int) -> ComplexMatrix:
    """
    (ℂ²⊗H_A)⊗(ℂ²⊗H_B) を (ℂ²⊗ℂ²)⊗(H_A⊗H_B) に並べ替える置換行列を返す。

    基底インデックス ((q_a·dimA + h_a)·2·dimB + q_b·dimB + h_b) を
    ((q_a·2 + q_b)·dimA·dimB + h_a·dimB + h_b) に写す。

    Parameters
    ----------
    dim_a, dim_b : int
        Alice / Bob の物理系の次元（1以上）

    Returns
    -------
    ComplexMatrix
        4·dimA·dimB 次の置換行列

    Raises
    ------
    DimensionMismatchError
        次元が1未満の場合
    """
    if dim_a < 1 or dim_b < 1:
        raise DimensionMismatchError("dims >= 1", (dim_a, dim_b))
    source = _regroup_permutation(dim_a, dim_b)
    P = np.zeros((source.size, source.size), dtype=np.complex128)
    P[np.arange(source.size), source] = 1.0
    return P


def _swap_factors(m: int, n: int) -> ComplexMatrix:
    """ℂ^m ⊗ ℂ^n → ℂ^n ⊗ ℂ^m の交換 |a⟩|b⟩ ↦ |b⟩|a⟩。"""
    S = np.zeros((m * n, m * n), dtype=np.complex128)
    for a in range(m):
        for b in range(n):
            S[b * m + a, a * n + b] = 1.0
    return S


def reg_swap_composed(dim_a: int, dim_b: int) -> ComplexMatrix:
    """
    結合律の付け替えと中央の交換から組み立てた regSwap を返す。

    (ℂ²⊗H_A)⊗(ℂ²⊗H_B) ≅ ℂ²⊗((H_A⊗ℂ²)⊗H_B) で H_A と ℂ² を交換し、
    ℂ²⊗((ℂ²⊗H_A)⊗H_B) ≅ (ℂ²⊗ℂ²)⊗(H_A⊗H_B) と結合し直す。
    結合律の付け替えは平坦化した基底では恒等写像になる。
    """
    if dim_a < 1 or dim_b < 1:
        raise DimensionMismatchError("dims >= 1", (dim_a, dim_b))
    return kron(identity(2), kron(_swap_factors(dim_a, 2), identity(dim_b)))
