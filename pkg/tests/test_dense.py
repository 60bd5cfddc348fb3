"""linalg.dense のテスト。"""
import numpy as np
import pytest

from core.exceptions import DimensionMismatchError
from linalg.dense import (
    anticommutator,
    dagger,
    expectation,
    identity,
    inner,
    kron,
    mat_op_norm,
    partial_trace_A,
    partial_trace_B,
    vec_norm,
)

Z = np.diag([1.0, -1.0]).astype(np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def test_kron_left_factor_is_first_slot():
    np.testing.assert_array_equal(kron(Z, identity(2)), np.diag([1, 1, -1, -1]))
    np.testing.assert_array_equal(kron(identity(2), Z), np.diag([1, -1, 1, -1]))


def test_kron_of_rectangular_factors():
    col = np.array([[1.0], [0.0]])
    assert kron(col, identity(3)).shape == (6, 3)


def test_dagger_and_anticommutator():
    Y = np.array([[0, -1j], [1j, 0]])
    np.testing.assert_array_equal(dagger(Y), Y)
    np.testing.assert_allclose(anticommutator(Z, X), np.zeros((2, 2)))
    np.testing.assert_allclose(anticommutator(Z, Z), 2 * identity(2))


def test_anticommutator_rejects_mismatched_shapes():
    with pytest.raises(DimensionMismatchError):
        anticommutator(Z, identity(3))


def test_norms():
    assert vec_norm([3.0, 4.0j]) == pytest.approx(5.0)
    assert mat_op_norm(np.diag([3.0, -5.0])) == pytest.approx(5.0)
    assert mat_op_norm(X) == pytest.approx(1.0)


def test_inner_is_conjugate_linear_in_first_argument():
    u = np.array([1j, 0.0])
    v = np.array([1.0, 0.0])
    assert inner(u, v) == pytest.approx(-1j)
    assert inner(v, u) == pytest.approx(1j)
    with pytest.raises(DimensionMismatchError):
        inner([1.0, 0.0], [1.0, 0.0, 0.0])


def test_expectation():
    psi = np.array([1.0, 1.0]) / np.sqrt(2)
    assert expectation(psi, X) == pytest.approx(1.0)
    assert expectation(psi, Z) == pytest.approx(0.0)
    with pytest.raises(DimensionMismatchError):
        expectation(psi, identity(3))


def test_partial_traces_of_product_operator():
    rng = np.random.default_rng(7)
    A = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    B = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    M = kron(A, B)
    np.testing.assert_allclose(partial_trace_B(M, 2, 3), A * np.trace(B), atol=1e-12)
    np.testing.assert_allclose(partial_trace_A(M, 2, 3), np.trace(A) * B, atol=1e-12)


def test_partial_trace_of_bell_state_is_maximally_mixed():
    phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    rho = np.outer(phi, phi.conj())
    np.testing.assert_allclose(partial_trace_B(rho, 2, 2), identity(2) / 2, atol=1e-15)
    np.testing.assert_allclose(partial_trace_A(rho, 2, 2), identity(2) / 2, atol=1e-15)


def test_partial_trace_rejects_wrong_shape():
    with pytest.raises(DimensionMismatchError):
        partial_trace_B(identity(5), 2, 2)


def _random_matrices(seed: int, d: int, count: int) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    return [rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)) for _ in range(count)]


@pytest.mark.parametrize("d", [2, 3])
def test_kron_mixed_product_and_associativity(d):
    A, B, C, D = _random_matrices(d, d, 4)
    np.testing.assert_allclose(kron(A, B) @ kron(C, D), kron(A @ C, B @ D), atol=1e-10)
    np.testing.assert_allclose(kron(kron(A, B), C), kron(A, kron(B, C)), atol=1e-12)


@pytest.mark.parametrize("d", [2, 3])
def test_op_norm_is_multiplicative_under_kron(d):
    A, B = _random_matrices(10 + d, d, 2)
    assert mat_op_norm(kron(A, B)) == pytest.approx(mat_op_norm(A) * mat_op_norm(B), abs=1e-8)
