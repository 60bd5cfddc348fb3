"""
CHSHモジュール。

標準2量子ビットモデルと抽象CHSH戦略（バイアス、二乗和恒等式）を提供する。
"""
from chsh.canonical import (
    BellState,
    CanonicalGates,
    canonical_gates,
    pauli_x,
    pauli_y,
    pauli_z,
    hadamard,
    h_prime,
    rotation_r,
    y_rotation,
    basis_ket,
    ket0,
    ket1,
    aux_state,
    bell_state,
    bell_basis_matrix,
    k_operator,
)
from chsh.model import (
    OBSERVABLE_NAMES,
    ValidationReport,
    BinaryObservable,
    CHSHStrategy,
    validate_binary_observable,
    chsh_operator,
    bias,
    delta,
    epsilon_deficit,
    tsirelson_sos_residual,
    anticommutator_expectation,
    conjugate_strategy,
)

__all__ = [
    # canonical
    "BellState", "CanonicalGates", "canonical_gates", "pauli_x", "pauli_y", "pauli_z",
    "hadamard", "h_prime", "rotation_r", "y_rotation", "basis_ket", "ket0", "ket1",
    "aux_state", "bell_state", "bell_basis_matrix", "k_operator",
    # model
    "OBSERVABLE_NAMES", "ValidationReport", "BinaryObservable", "CHSHStrategy",
    "validate_binary_observable", "chsh_operator", "bias", "delta", "epsilon_deficit",
    "tsirelson_sos_residual", "anticommutator_expectation", "conjugate_strategy",
]
