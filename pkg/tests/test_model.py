"""chsh.model のテスト。"""
import math

import numpy as np
import pytest
from scipy.linalg import expm

from chsh.canonical import bell_state, h_prime, hadamard, pauli_x, pauli_z
from chsh.model import (
    BinaryObservable,
    CHSHStrategy,
    anticommutator_expectation,
    chsh_operator,
    bias,
    conjugate_strategy,
    delta,
    epsilon_deficit,
    tsirelson_sos_residual,
    validate_binary_observable,
)
from core.config import C_CONSTANT, TSIRELSON_BOUND
from core.exceptions import DimensionMismatchError, InvalidObservableError, InvalidStrategyError
from linalg.dense import dagger, mat_op_norm
from strategies.generators import canonical_strategy, degenerate_strategy, random_hermitian, random_strategy

PHI = bell_state("phi-plus")


def test_validate_binary_observable():
    assert validate_binary_observable(pauli_z()).valid
    assert validate_binary_observable(hadamard()).valid
    report = validate_binary_observable(np.diag([1.0, 0.5]))
    assert not report.valid
    assert report.involution_residual == pytest.approx(0.75)
    assert report.hermiticity_residual == pytest.approx(0.0)
    assert not validate_binary_observable([[0.0, 1.0], [0.0, 0.0]]).valid
    with pytest.raises(DimensionMismatchError):
        validate_binary_observable(np.zeros((2, 3)))


def test_binary_observable_record():
    observable = BinaryObservable.from_matrix(pauli_x())
    assert observable.valid
    assert observable.dim == 2


def test_create_enforces_invariants():
    with pytest.raises(InvalidStrategyError):
        CHSHStrategy.create(psi=2 * PHI, A0=pauli_z(), A1=pauli_x(), B0=hadamard(), B1=h_prime())
    with pytest.raises(InvalidObservableError) as excinfo:
        CHSHStrategy.create(psi=PHI, A0=pauli_z(), A1=np.diag([1.0, 0.5]), B0=hadamard(), B1=h_prime())
    assert excinfo.value.name == "A1"


def test_direct_construction_keeps_reports():
    S = CHSHStrategy(psi=PHI, A0=pauli_z() + pauli_x(), A1=pauli_x(), B0=hadamard(), B1=h_prime())
    assert not S.is_valid
    assert not S.reports["A0"].valid
    assert S.reports["B1"].valid


def test_dimension_and_finiteness_checks():
    with pytest.raises(DimensionMismatchError):
        CHSHStrategy(psi=PHI, A0=pauli_z(), A1=np.eye(3), B0=hadamard(), B1=h_prime())
    with pytest.raises(DimensionMismatchError):
        CHSHStrategy(psi=np.ones(3) / math.sqrt(3), A0=pauli_z(), A1=pauli_x(), B0=hadamard(), B1=h_prime())
    with pytest.raises(InvalidStrategyError):
        CHSHStrategy(psi=np.array([np.nan, 0, 0, 1]), A0=pauli_z(), A1=pauli_x(), B0=hadamard(), B1=h_prime())


def test_canonical_bias_is_tsirelson_bound():
    S = canonical_strategy()
    assert bias(S) == pytest.approx(TSIRELSON_BOUND, abs=1e-12)
    assert epsilon_deficit(S) <= 1e-12


def test_delta():
    assert delta(0.0) == 0.0
    eps = 1e-4
    assert delta(eps) == pytest.approx(eps + 4 * math.sqrt(C_CONSTANT * eps))


def test_sos_identity_on_random_strategies():
    dims = [(a, b) for a in (2, 3, 4) for b in (2, 3, 4)]
    worst = 0.0
    for seed in range(200):
        dim_a, dim_b = dims[seed % len(dims)]
        worst = max(worst, tsirelson_sos_residual(random_strategy(dim_a, dim_b, seed)))
    assert worst <= 1e-9


def test_sos_identity_needs_involutions():
    S = CHSHStrategy(psi=PHI, A0=pauli_z() + pauli_x(), A1=pauli_x(), B0=hadamard(), B1=h_prime())
    with pytest.raises(InvalidObservableError):
        tsirelson_sos_residual(S)
    assert tsirelson_sos_residual(S, strict=False) > 0.1


def test_bias_respects_tsirelson_bound():
    for seed in range(100):
        assert bias(random_strategy(2, 2, seed)) <= TSIRELSON_BOUND + 1e-9


def test_local_unitaries_preserve_bias():
    rng = np.random.default_rng(5)
    for seed in range(10):
        S = random_strategy(2, 3, seed)
        UA = expm(-1j * random_hermitian(rng, 2))
        UB = expm(-1j * random_hermitian(rng, 3))
        T = conjugate_strategy(S, UA, UB)
        assert T.is_valid
        assert bias(T) == pytest.approx(bias(S), abs=1e-12)


def test_strategy_does_not_share_caller_arrays():
    A0 = pauli_z()
    psi = PHI.copy()
    S = CHSHStrategy.create(psi=psi, A0=A0, A1=pauli_x(), B0=hadamard(), B1=h_prime())
    A0[0, 0] = 7.0
    psi[0] = 5.0
    assert S.A0 is not A0
    np.testing.assert_array_equal(S.A0, pauli_z())
    assert bias(S) == pytest.approx(TSIRELSON_BOUND, abs=1e-12)
    assert S.is_valid
    with pytest.raises(ValueError):
        S.psi[0] = 0.0
    for name in ("A0", "A1", "B0", "B1"):
        with pytest.raises(ValueError):
            getattr(S, name)[0, 0] = 0.0


def test_strategy_uses_identity_equality():
    S = canonical_strategy()
    assert S == S
    assert S != canonical_strategy()
    assert len({S, canonical_strategy()}) == 2


def test_observable_accessor():
    S = CHSHStrategy(psi=PHI, A0=pauli_z() + pauli_x(), A1=pauli_x(), B0=hadamard(), B1=h_prime())
    assert S.observable("A1").valid
    assert not S.observable("A0").valid
    np.testing.assert_array_equal(S.observable("B0").matrix, S.B0)


def test_equal_bob_observables_give_anticommutator_four():
    alice, bob = anticommutator_expectation(degenerate_strategy("gap"))
    assert bob == pytest.approx(4.0, abs=1e-9)
    assert alice == pytest.approx(0.0, abs=1e-12)


def test_anticommutator_expectation_symmetric_in_alice_order():
    dims = [(a, b) for a in (2, 3, 4) for b in (2, 3, 4)]
    for seed in range(45):
        dim_a, dim_b = dims[seed % len(dims)]
        S = random_strategy(dim_a, dim_b, seed)
        T = CHSHStrategy.create(psi=S.psi, A0=S.A1, A1=S.A0, B0=S.B0, B1=S.B1)
        for before, after in zip(anticommutator_expectation(S), anticommutator_expectation(T)):
            assert after == pytest.approx(before, abs=1e-12)


def test_chsh_operator_is_hermitian():
    dims = [(a, b) for a in (2, 3, 4) for b in (2, 3, 4)]
    for seed in range(45):
        dim_a, dim_b = dims[seed % len(dims)]
        C = chsh_operator(random_strategy(dim_a, dim_b, seed))
        assert mat_op_norm(C - dagger(C)) <= 1e-12
