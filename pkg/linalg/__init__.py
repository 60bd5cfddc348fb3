"""
線形代数モジュール。

密な複素行列の基本演算、決定的なエルミート固有値分解、行列関数を提供する。
"""
from linalg.dense import (
    ComplexMatrix,
    ComplexVector,
    as_matrix,
    as_vector,
    identity,
    kron,
    dagger,
    anticommutator,
    vec_norm,
    mat_op_norm,
    inner,
    expectation,
    partial_trace_A,
    partial_trace_B,
)
from linalg.spectral import (
    SpectralDecomposition,
    hermitian_eig,
    herm_fun,
    hermiticity_residual,
    is_hermitian,
    phase_normalize,
    signum,
)

__all__ = [
    # dense
    "ComplexMatrix", "ComplexVector", "as_matrix", "as_vector", "identity",
    "kron", "dagger", "anticommutator", "vec_norm", "mat_op_norm", "inner",
    "expectation", "partial_trace_A", "partial_trace_B",
    # spectral
    "SpectralDecomposition", "hermitian_eig", "herm_fun", "hermiticity_residual",
    "is_hermitian", "phase_normalize", "signum",
]
