"""linalg.spectral のテスト。"""
import numpy as np
import pytest

from chsh.canonical import bell_state, k_operator
from core.exceptions import NotHermitianError
from linalg.dense import identity
from linalg.spectral import herm_fun, hermitian_eig, is_hermitian, phase_normalize, signum
from strategies.generators import random_hermitian


def test_spectrum_of_k_operator():
    decomposition = hermitian_eig(k_operator())
    s = 2 * np.sqrt(2)
    np.testing.assert_allclose(decomposition.eigenvalues, [s, 0.0, 0.0, -s], atol=1e-10)
    top = decomposition.top_vector()
    assert abs(abs(np.vdot(bell_state("phi-plus"), top)) - 1.0) <= 1e-10
    np.testing.assert_allclose(top, bell_state("phi-plus"), atol=1e-10)


def test_eigenvalues_descending_and_reconstruction():
    rng = np.random.default_rng(11)
    for d in (1, 2, 3, 5):
        M = random_hermitian(rng, d)
        decomposition = hermitian_eig(M)
        assert np.all(np.diff(decomposition.eigenvalues) <= 0)
        np.testing.assert_allclose(decomposition.reconstruct(), M, atol=1e-12)
        V = decomposition.eigenvectors
        np.testing.assert_allclose(V.conj().T @ V, identity(d), atol=1e-12)


def test_decomposition_is_deterministic_and_read_only():
    M = k_operator()
    first = hermitian_eig(M)
    second = hermitian_eig(M.copy())
    assert np.array_equal(first.eigenvalues, second.eigenvalues)
    assert np.array_equal(first.eigenvectors, second.eigenvectors)
    with pytest.raises(ValueError):
        first.eigenvalues[0] = 0.0


def test_tie_groups_sorted_lexicographically():
    decomposition = hermitian_eig(identity(3))
    keys = [tuple(c for z in decomposition.eigenvectors[:, k] for c in (z.real, z.imag)) for k in range(3)]
    assert keys == sorted(keys)


def test_eigenvectors_are_phase_normalized():
    rng = np.random.default_rng(3)
    decomposition = hermitian_eig(random_hermitian(rng, 4))
    for _, v in decomposition.pairs():
        lead = v[np.flatnonzero(np.abs(v) > 1e-12)[0]]
        assert lead.imag == pytest.approx(0.0, abs=1e-15)
        assert lead.real > 0


def test_non_hermitian_input_rejected():
    with pytest.raises(NotHermitianError):
        hermitian_eig([[0.0, 1.0], [0.0, 0.0]])
    assert not is_hermitian([[0.0, 1.0], [0.0, 0.0]])
    assert is_hermitian(k_operator())


def test_phase_normalize():
    np.testing.assert_allclose(phase_normalize([0.0, 1j, 1.0]), [0.0, 1.0, -1j])
    np.testing.assert_array_equal(phase_normalize([0.0, 0.0]), [0.0, 0.0])


def test_signum_maps_zero_to_plus_one():
    assert signum(0.0) == 1.0
    assert signum(-1e-300) == -1.0
    Z = np.diag([1.0, -1.0])
    np.testing.assert_allclose(herm_fun(Z, signum), Z, atol=1e-15)
    np.testing.assert_allclose(herm_fun(np.zeros((2, 2)), signum), identity(2), atol=1e-15)


def test_herm_fun_identity_reconstructs_matrix():
    rng = np.random.default_rng(13)
    for d in (2, 3):
        M = random_hermitian(rng, d)
        np.testing.assert_allclose(herm_fun(M, lambda x: x), M, atol=1e-9)
        np.testing.assert_allclose(herm_fun(M, lambda x: x * x), M @ M, atol=1e-9)
