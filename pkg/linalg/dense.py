"""
密な複素線形代数の基本演算モジュール。

クロネッカー積、随伴、ノルム、内積、部分トレースを提供します。
行列・ベクトルは dtype complex128 の numpy 配列で表します。
"""
import numpy as np
import numpy.typing as npt

from core.exceptions import DimensionMismatchError

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]


def as_matrix(A: npt.ArrayLike) -> ComplexMatrix:
    """配列を complex128 の2次元配列に変換する。"""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2:
        raise DimensionMismatchError("2-D matrix", M.shape)
    return M


def as_vector(v: npt.ArrayLike) -> ComplexVector:
    """配列を complex128 の1次元配列に変換する。"""
    x = np.asarray(v, dtype=np.complex128)
    if x.ndim != 1 or x.size == 0:
        raise DimensionMismatchError("non-empty 1-D vector", x.shape)
    return x


def identity(d: int) -> ComplexMatrix:
    """d次元の単位行列。"""
    return np.eye(d, dtype=np.complex128)


def kron(A: npt.ArrayLike, B: npt.ArrayLike) -> ComplexMatrix:
    """
    クロネッカー積 A ⊗ B を返す。

    左の因子が第1テンソルスロットとなる。すなわち
    ``result[i_A*rows_B + i_B, j_A*cols_B + j_B] = A[i_A, j_A] * B[i_B, j_B]``。

    Parameters
    ----------
    A, B : array_like
        2次元の複素行列

    Returns
    -------
    ComplexMatrix
        (rows_A*rows_B) × (cols_A*cols_B) 行列
    """
    return np.kron(as_matrix(A), as_matrix(B))


def dagger(A: npt.ArrayLike) -> ComplexMatrix:
    """共役転置 A† を返す。"""
    return as_matrix(A).conj().T


def anticommutator(A: npt.ArrayLike, B: npt.ArrayLike) -> ComplexMatrix:
    """反交換子 {A, B} = AB + BA を返す。"""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise DimensionMismatchError(A.shape, B.shape)
    return A @ B + B @ A


def vec_norm(v: npt.ArrayLike) -> float:
    """ユークリッドノルム √⟨v, v⟩。"""
    return float(np.linalg.norm(as_vector(v)))


def mat_op_norm(M: npt.ArrayLike) -> float:
    """作用素ノルム（最大特異値）。"""
    M = as_matrix(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, ord=2))


def inner(u: npt.ArrayLike, v: npt.ArrayLike) -> complex:
    """
    内積 ⟨u|v⟩ を返す。

    第1引数について共役線形、第2引数について線形（ブラケット記法の規約）。

    Raises
    ------
    DimensionMismatchError
        次元が異なる場合
    """
    u = as_vector(u)
    v = as_vector(v)
    if u.shape != v.shape:
        raise DimensionMismatchError(u.shape, v.shape)
    return complex(np.vdot(u, v))


def expectation(psi: npt.ArrayLike, M: npt.ArrayLike) -> complex:
    """期待値 ⟨ψ|M|ψ⟩ を返す。"""
    psi = as_vector(psi)
    M = as_matrix(M)
    if M.shape != (psi.size, psi.size):
        raise DimensionMismatchError((psi.size, psi.size), M.shape)
    return complex(np.vdot(psi, M @ psi))


def _check_bipartite(M: ComplexMatrix, dim_a: int, dim_b: int) -> None:
    """M が (dim_a*dim_b) 次の正方行列であることを確認する。"""
    n = dim_a * dim_b
    if dim_a < 1 or dim_b < 1 or M.shape != (n, n):
        raise DimensionMismatchError((n, n), M.shape)


def partial_trace_B(M: npt.ArrayLike, dim_a: int, dim_b: int) -> ComplexMatrix:
    """
    第2因子（Bob側）についての部分トレース Tr_B(M) を返す。

    Parameters
    ----------
    M : array_like
        (dim_a*dim_b) 次の正方行列
    dim_a, dim_b : int
        各因子の次元

    Returns
    -------
    ComplexMatrix
        dim_a 次の正方行列

    Raises
    ------
    DimensionMismatchError
        M の形が (dim_a*dim_b) 次正方でない場合
    """
    M = as_matrix(M)
    _check_bipartite(M, dim_a, dim_b)
    return np.einsum("ijkj->ik", M.reshape(dim_a, dim_b, dim_a, dim_b))


def partial_trace_A(M: npt.ArrayLike, dim_a: int, dim_b: int) -> ComplexMatrix:
    """第1因子（Alice側）についての部分トレース Tr_A(M) を返す。"""
    M = as_matrix(M)
    _check_bipartite(M, dim_a, dim_b)
    return np.einsum("ijil->jl", M.reshape(dim_a, dim_b, dim_a, dim_b))
