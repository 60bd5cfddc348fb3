"""
エルミート行列のスペクトル分解モジュール。

固有値は降順、縮退した固有値の固有ベクトルは位相正規化後の辞書式順序で並べ、
同一入力に対して同一出力を返します（ジャンク状態抽出の再現性のため）。
"""
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np
import numpy.typing as npt

from core import logger
from core.config import DEFAULT_TOL, EIG_TIE_TOL, PHASE_TOL
from core.exceptions import DimensionMismatchError, NoConvergenceError, NotHermitianError
from linalg.dense import ComplexMatrix, ComplexVector, as_matrix, dagger, mat_op_norm


@dataclass(frozen=True)
class SpectralDecomposition:
    """エルミート行列の固有値・固有ベクトルの組。

    Attributes
    ----------
    eigenvalues : numpy.ndarray
        実固有値（降順）
    eigenvectors : numpy.ndarray
        列 k が eigenvalues[k] に対応する正規直交固有ベクトル
    """
    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: ComplexMatrix

    def __post_init__(self) -> None:
        # 生成後は読み取り専用（スレッド間で安全に共有できるように）
        self.eigenvalues.setflags(write=False)
        self.eigenvectors.setflags(write=False)

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def pairs(self) -> Iterator[tuple[float, ComplexVector]]:
        """(固有値, 固有ベクトル) の組を降順に返す。"""
        for k, value in enumerate(self.eigenvalues):
            yield float(value), self.eigenvectors[:, k]

    def top_vector(self) -> ComplexVector:
        """最大固有値の固有ベクトル（縮退時は決定的順序の先頭）。"""
        return self.eigenvectors[:, 0].copy()

    def reconstruct(self) -> ComplexMatrix:
        """Σ λ_k v_k v_k† を返す。"""
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T


def phase_normalize(v: npt.ArrayLike, tol: float = PHASE_TOL) -> ComplexVector:
    """
    大きさが tol を超える最初の成分が正の実数になるように大域位相を揃える。

    Parameters
    ----------
    v : array_like
        複素ベクトル
    tol : float
        「非ゼロ」とみなす成分の大きさ

    Returns
    -------
    ComplexVector
        位相を揃えたベクトル（すべての成分が tol 以下なら入力のコピー）
    """
    x = np.array(v, dtype=np.complex128)
    nonzero = np.flatnonzero(np.abs(x) > tol)
    if nonzero.size == 0:
        return x
    lead = x[nonzero[0]]
    return x * (abs(lead) / lead)


def hermiticity_residual(M: npt.ArrayLike) -> float:
    """‖M − M†‖（作用素ノルム）。"""
    M = as_matrix(M)
    return mat_op_norm(M - dagger(M))


def is_hermitian(M: npt.ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    """‖M − M†‖ ≤ tol·max(1, ‖M‖) かどうか。"""
    M = as_matrix(M)
    if M.shape[0] != M.shape[1]:
        return False
    return hermiticity_residual(M) <= tol * max(1.0, mat_op_norm(M))


def _require_hermitian(M: ComplexMatrix, tol: float) -> float:
    """エルミート性を検証し、M の作用素ノルムを返す。"""
    if M.shape[0] != M.shape[1]:
        raise DimensionMismatchError("square matrix", M.shape)
    norm = mat_op_norm(M)
    residual = hermiticity_residual(M)
    if residual > tol * max(1.0, norm):
        raise NotHermitianError(residual, tol)
    return norm


def _lexicographic_key(v: ComplexVector) -> tuple[float, ...]:
    """(re, im) の並びによる辞書式比較キー。"""
    return tuple(float(c) for z in v for c in (z.real, z.imag))


def hermitian_eig(M: npt.ArrayLike, tol: float = DEFAULT_TOL) -> SpectralDecomposition:
    """
    エルミート行列の決定的な固有値分解を行う。

    固有値は降順に並べる。|λ_j − λ_k| ≤ 1e-10·max(1, ‖M‖) の縮退群の中では、
    位相正規化した固有ベクトルを (re, im) 成分列の辞書式順序で並べる。

    Parameters
    ----------
    M : array_like
        エルミート行列
    tol : float
        エルミート性の相対許容誤差

    Returns
    -------
    SpectralDecomposition
        スペクトル分解

    Raises
    ------
    NotHermitianError
        ‖M − M†‖ > tol·max(1, ‖M‖) の場合
    NoConvergenceError
        LAPACK の固有値計算が収束しなかった場合
    """
    M = as_matrix(M)
    norm = _require_hermitian(M, tol)
    H = (M + dagger(M)) / 2.0

    try:
        values, vectors = np.linalg.eigh(H)
    except np.linalg.LinAlgError as e:
        raise NoConvergenceError(str(e))

    # eigh は昇順なので反転
    values = values[::-1].copy()
    vectors = vectors[:, ::-1]
    columns = [phase_normalize(vectors[:, k]) for k in range(vectors.shape[1])]

    # 縮退群ごとに辞書式順序で並べ替え
    tie_tol = EIG_TIE_TOL * max(1.0, norm)
    order: list[int] = []
    start = 0
    n = len(values)
    while start < n:
        stop = start + 1
        while stop < n and abs(values[start] - values[stop]) <= tie_tol:
            stop += 1
        group = sorted(range(start, stop), key=lambda k: _lexicographic_key(columns[k]))
        if len(group) > 1:
            logger.debug(f"hermitian_eig: λ ≈ {values[start]:.3e} の縮退度 {len(group)}")
        order.extend(group)
        start = stop

    eigenvalues = np.array([values[k] for k in order], dtype=np.float64)
    eigenvectors = np.column_stack([columns[k] for k in order]) if n else np.zeros((0, 0), np.complex128)
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def herm_fun(
    M: npt.ArrayLike,
    f: Callable[[float], float],
    tol: float = DEFAULT_TOL
) -> ComplexMatrix:
    """
    エルミート行列の関数 f(M) = Σ f(λ_k) v_k v_k† を返す。

    Parameters
    ----------
    M : array_like
        エルミート行列
    f : Callable[[float], float]
        固有値に適用する実関数
    tol : float
        エルミート性の相対許容誤差

    Returns
    -------
    ComplexMatrix
        f(M)。f が実数値ならエルミート

    Raises
    ------
    NotHermitianError
        M がエルミートでない場合
    """
    decomposition = hermitian_eig(M, tol)
    mapped = np.array([f(float(value)) for value in decomposition.eigenvalues])
    V = decomposition.eigenvectors
    return (V * mapped) @ V.conj().T


def signum(x: float) -> float:
    """符号関数。ゼロは +1 に写す。"""
    return -1.0 if x < 0.0 else 1.0
