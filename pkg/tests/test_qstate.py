import numpy as np
import pytest

from oracles import bell_phi_plus, entropy_bits, partial_trace_loops
from tomocorr import (
    DensityMatrix,
    NotHermitian,
    NotPositive,
    NotXShaped,
    StateValidationError,
    TraceNotOne,
    TwoQubitState,
    XState,
    as_x_state,
    partial_trace,
    quantum_mutual_information,
    validate_density,
    von_neumann_entropy,
)


def test_entropy_of_known_spectrum():
    # S(diag(1/2, 1/4, 1/8, 1/8)) = 1/2 + 2/4 + 3/8 + 3/8 = 7/4 exactly
    dm = validate_density(np.diag([0.5, 0.25, 0.125, 0.125]))
    assert von_neumann_entropy(dm) == pytest.approx(1.75, abs=1e-14)


def test_entropy_extremes():
    pure = np.diag([1.0, 0.0, 0.0, 0.0])
    mixed = np.eye(4) / 4.0
    assert von_neumann_entropy(validate_density(pure)) == 0.0
    assert von_neumann_entropy(validate_density(mixed)) == pytest.approx(2.0, abs=1e-14)


def test_validation_rejects_non_hermitian():
    m = np.eye(4) / 4.0
    m[0, 1] = 0.1
    with pytest.raises(NotHermitian):
        validate_density(m)


def test_validation_rejects_bad_trace():
    with pytest.raises(TraceNotOne):
        validate_density(np.eye(4) / 2.0)


def test_validation_rejects_negative_eigenvalue():
    with pytest.raises(NotPositive):
        validate_density(np.diag([0.7, 0.5, -0.1, -0.1]))


def test_validation_rejects_wrong_shape():
    with pytest.raises(StateValidationError):
        validate_density(np.eye(3) / 3.0)


def test_density_matrix_is_read_only():
    dm = validate_density(np.eye(4) / 4.0)
    with pytest.raises(ValueError):
        dm.matrix[0, 0] = 1.0


def test_partial_trace_against_index_loops():
    rng = np.random.default_rng(7)
    for _ in range(25):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        m = a @ a.conj().T
        m /= np.trace(m).real
        for side in ("A", "B"):
            got = partial_trace(validate_density(m), side).matrix
            want = partial_trace_loops(m, side)
            assert np.max(np.abs(got - want)) < 1e-14


def test_partial_trace_rejects_bad_side():
    dm = validate_density(np.eye(4) / 4.0)
    with pytest.raises(ValueError):
        partial_trace(dm, "C")


def test_two_qubit_state_marginals_of_product():
    pa = np.array([[0.7, 0.0], [0.0, 0.3]])
    pb = np.array([[0.6, 0.2], [0.2, 0.4]])
    st = TwoQubitState.from_matrix(np.kron(pa, pb))
    assert np.max(np.abs(st.marginal_a.matrix - pa)) < 1e-14
    assert np.max(np.abs(st.marginal_b.matrix - pb)) < 1e-14
    assert quantum_mutual_information(st) == pytest.approx(0.0, abs=1e-12)


def test_mutual_information_of_bell_state():
    st = TwoQubitState.from_matrix(bell_phi_plus())
    assert quantum_mutual_information(st) == pytest.approx(2.0, abs=1e-12)


def test_mutual_information_matches_eigvalsh_route():
    rng = np.random.default_rng(11)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    m = a @ a.conj().T
    m /= np.trace(m).real
    st = TwoQubitState.from_matrix(m)
    want = (
        entropy_bits(partial_trace_loops(m, "B"))
        + entropy_bits(partial_trace_loops(m, "A"))
        - entropy_bits(m)
    )
    assert quantum_mutual_information(st) == pytest.approx(want, abs=1e-12)


class TestXState:
    def test_matrix_pattern(self):
        x = XState(0.4, 0.3, 0.2, 0.1, 0.15, 0.2)
        m = x.to_matrix()
        assert m[0, 3] == m[3, 0] == 0.15
        assert m[1, 2] == m[2, 1] == 0.2
        mask = np.zeros((4, 4), dtype=bool)
        mask[np.arange(4), np.arange(4)] = True
        mask[0, 3] = mask[3, 0] = mask[1, 2] = mask[2, 1] = True
        assert np.all(m[~mask] == 0.0)

    def test_bloch_data(self):
        x = XState(0.4, 0.3, 0.2, 0.1)
        assert x.bloch_z_a == pytest.approx(0.4, abs=1e-15)
        assert x.bloch_z_b == pytest.approx(0.2, abs=1e-15)
        assert x.corr_zz == pytest.approx(0.0, abs=1e-15)

    def test_trace_enforced(self):
        with pytest.raises(TraceNotOne):
            XState(0.5, 0.5, 0.5, 0.5)

    def test_positivity_enforced(self):
        # coherence above sqrt(rho11 * rho44) makes the outer block indefinite
        with pytest.raises(NotPositive):
            XState(0.4, 0.1, 0.1, 0.4, rho14=0.41)

    def test_round_trip(self):
        x = XState(0.35, 0.25, 0.25, 0.15, 0.1, 0.05)
        st = x.to_state()
        back = as_x_state(st)
        assert back == x


def test_as_x_state_rejects_off_pattern():
    m = np.eye(4) / 4.0 + 0.0j
    m[0, 1] = m[1, 0] = 0.05
    with pytest.raises(NotXShaped):
        as_x_state(TwoQubitState.from_matrix(m))


def test_as_x_state_rejects_complex_coherence():
    m = np.diag([0.4, 0.1, 0.1, 0.4]).astype(complex)
    m[0, 3] = 0.1j
    m[3, 0] = -0.1j
    with pytest.raises(NotXShaped):
        as_x_state(TwoQubitState.from_matrix(m))
