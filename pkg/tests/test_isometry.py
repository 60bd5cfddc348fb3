"""extraction.isometry のテスト。"""
import itertools

import numpy as np
import pytest

from chsh.canonical import hadamard, pauli_x, pauli_z, rotation_r
from core.exceptions import InvalidObservableError
from extraction.isometry import (
    build_va,
    build_vb,
    build_vb_symmetrized,
    control,
    embed,
    reg_swap,
    reg_swap_composed,
    unitary_ua,
    unitary_ub,
)
from linalg.dense import identity, kron, mat_op_norm
from strategies.generators import random_strategy

CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def _random_strategies(count: int):
    dims = [(a, b) for a in (2, 3, 4) for b in (2, 3, 4)]
    for seed in range(count):
        dim_a, dim_b = dims[seed % len(dims)]
        yield random_strategy(dim_a, dim_b, 1000 + seed)


def test_control_gates():
    np.testing.assert_array_equal(control(identity(2)), identity(4))
    np.testing.assert_array_equal(control(pauli_x()), CNOT)
    np.testing.assert_array_equal(control(pauli_z()), np.diag([1, 1, 1, -1]))


def test_embed():
    E = embed([1.0, 0.0], 3)
    assert E.shape == (6, 3)
    np.testing.assert_array_equal(E[:3], identity(3))
    np.testing.assert_array_equal(E[3:], np.zeros((3, 3)))


def test_unitary_ua():
    U = unitary_ua(pauli_z(), pauli_x())
    np.testing.assert_allclose(U.conj().T @ U, identity(4), atol=1e-10)
    np.testing.assert_allclose(unitary_ua(identity(2), identity(2)), identity(4), atol=1e-15)
    V = unitary_ub(hadamard(), hadamard())
    np.testing.assert_allclose(V.conj().T @ V, identity(4), atol=1e-10)


def test_canonical_isometries_act_as_tensoring():
    VA = build_va(pauli_z(), pauli_x())
    np.testing.assert_allclose(VA.conj().T @ VA, identity(2), atol=1e-12)
    for j in range(2):
        e = identity(2)[:, j]
        np.testing.assert_allclose(VA @ e, np.kron(e, [1.0, 0.0]), atol=1e-12)


def test_exact_intertwinings_on_random_strategies():
    for S in _random_strategies(100):
        VA = build_va(S.A0, S.A1)
        VB = build_vb(S.B0, S.B1)
        assert mat_op_norm(kron(pauli_z(), identity(S.dim_a)) @ VA - VA @ S.A0) <= 1e-9
        assert mat_op_norm(kron(hadamard(), identity(S.dim_b)) @ VB - VB @ S.B0) <= 1e-9
        np.testing.assert_allclose(VA.conj().T @ VA, identity(S.dim_a), atol=1e-9)
        np.testing.assert_allclose(VB.conj().T @ VB, identity(S.dim_b), atol=1e-9)


def test_isometry_without_anticommutation():
    VA = build_va(pauli_z(), pauli_z())
    np.testing.assert_allclose(VA.conj().T @ VA, identity(2), atol=1e-12)


def test_vb_rotation_absorbed_at_the_end():
    for S in _random_strategies(9):
        symmetric = build_vb_symmetrized(S.B0, S.B1)
        np.testing.assert_allclose(build_vb(S.B0, S.B1), kron(rotation_r(), identity(S.dim_b)) @ symmetric,
                                   atol=1e-12)
        assert mat_op_norm(kron(pauli_z(), identity(S.dim_b)) @ symmetric - symmetric @ S.B0) <= 1e-9


def test_invalid_observable_rejected():
    with pytest.raises(InvalidObservableError):
        build_va(pauli_z(), np.diag([1.0, 0.5]))
    with pytest.raises(InvalidObservableError):
        build_vb(np.diag([1.0, 0.5]), pauli_z())


def test_reg_swap_trivial_and_orthogonal():
    np.testing.assert_array_equal(reg_swap(1, 1), identity(4))
    for dim_a, dim_b in itertools.product((1, 2, 3), repeat=2):
        P = reg_swap(dim_a, dim_b)
        np.testing.assert_array_equal(P.T @ P, identity(4 * dim_a * dim_b))


def test_reg_swap_index_formula():
    dim_a, dim_b = 2, 3
    P = reg_swap(dim_a, dim_b)
    for q_a, h_a, q_b, h_b in itertools.product(range(2), range(dim_a), range(2), range(dim_b)):
        source = (q_a * dim_a + h_a) * 2 * dim_b + q_b * dim_b + h_b
        target = (q_a * 2 + q_b) * dim_a * dim_b + h_a * dim_b + h_b
        assert P[target, source] == 1.0


def test_reg_swap_basis_examples():
    P = reg_swap(2, 2)
    e = identity(16)
    # |q_a=0, h_a=1⟩⊗|q_b=1, h_b=0⟩ は入力・出力とも index 6
    np.testing.assert_array_equal(P @ e[:, 6], e[:, 6])
    # |q_a=0, h_a=1⟩⊗|q_b=0, h_b=0⟩ (index 4) → |q_a q_b = 00⟩⊗|h_a h_b = 10⟩ (index 2)
    np.testing.assert_array_equal(P @ e[:, 4], e[:, 2])


def test_reg_swap_matches_brute_force_and_composition():
    rng = np.random.default_rng(0)
    for dim_a, dim_b in itertools.product((1, 2, 3), repeat=2):
        v = rng.normal(size=4 * dim_a * dim_b)
        expected = v.reshape(2, dim_a, 2, dim_b).transpose(0, 2, 1, 3).ravel()
        np.testing.assert_array_equal(reg_swap(dim_a, dim_b) @ v, expected)
        np.testing.assert_array_equal(reg_swap_composed(dim_a, dim_b), reg_swap(dim_a, dim_b))
