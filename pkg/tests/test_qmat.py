import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from switchcap.qmat import (
    DensityMatrix,
    DimensionMismatchError,
    InvalidStateError,
    Spectrum,
    entropy_bits,
    hermitian_spectrum,
    partial_trace,
    tensor,
    von_neumann_entropy,
)

from helpers import ginibre, haar_unitary

SX = np.array([[0, 1], [1, 0]], dtype=complex)


class TestTensor:
    def test_identity(self):
        np.testing.assert_allclose(tensor(np.eye(2), np.eye(2)), np.eye(4))

    def test_projectors(self):
        p = np.diag([1.0, 0.0])
        np.testing.assert_allclose(tensor(p, p), np.diag([1.0, 0, 0, 0]))

    def test_sigma_x_with_projector(self):
        # nonzero entries of sigma_x (x) |0><0| sit exactly at (0,2), (2,0)
        out = tensor(SX, np.diag([1.0, 0.0]))
        nz = {tuple(idx) for idx in np.argwhere(np.abs(out) > 0)}
        assert nz == {(0, 2), (2, 0)}

    @given(st.integers(0, 1000))
    def test_trace_multiplicative(self, seed):
        rng = np.random.default_rng(seed)
        a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        assert np.isclose(tensor(a, b).trace(), a.trace() * b.trace())

    @given(st.integers(0, 1000))
    def test_associative(self, seed):
        rng = np.random.default_rng(seed)
        a, b, c = (rng.standard_normal((2, 2)) for _ in range(3))
        np.testing.assert_allclose(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))


class TestPartialTrace:
    def test_product_state(self):
        rho, sigma = ginibre(2, 0), ginibre(3, 1)
        joint = DensityMatrix(tensor(rho.matrix, sigma.matrix))
        np.testing.assert_allclose(
            partial_trace(joint, 2, 3, "A").matrix, rho.matrix, atol=1e-10
        )
        np.testing.assert_allclose(
            partial_trace(joint, 2, 3, "B").matrix, sigma.matrix, atol=1e-10
        )

    def test_bell_state(self):
        v = np.zeros(4, dtype=complex)
        v[0] = v[3] = 1 / np.sqrt(2)
        bell = DensityMatrix(np.outer(v, v.conj()))
        np.testing.assert_allclose(
            partial_trace(bell, 2, 2, "A").matrix, np.eye(2) / 2, atol=1e-12
        )

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            partial_trace(ginibre(4, 0), 3, 2, "A")

    @given(st.integers(0, 500))
    @settings(max_examples=30)
    def test_trace_preserved(self, seed):
        joint = ginibre(6, seed)
        red = partial_trace(joint, 2, 3, "B")
        assert np.isclose(red.matrix.trace(), 1.0)


class TestSpectrum:
    def test_identity(self):
        assert hermitian_spectrum(np.eye(3)).eigenvalues == (1.0, 1.0, 1.0)

    def test_pauli_x(self):
        np.testing.assert_allclose(hermitian_spectrum(SX).eigenvalues, (1.0, -1.0))

    def test_control_marginal_eigenvalues(self):
        # 1/2 I + (1/8) sigma_x has eigenvalues 5/8 and 3/8
        m = np.eye(2) / 2 + SX / 8
        np.testing.assert_allclose(
            hermitian_spectrum(m).eigenvalues, (5 / 8, 3 / 8), atol=1e-12
        )

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            hermitian_spectrum(np.array([[0, 1], [0, 0]], dtype=complex))

    @given(st.integers(0, 500))
    @settings(max_examples=30)
    def test_sums_to_trace(self, seed):
        rng = np.random.default_rng(seed)
        g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        h = g + g.conj().T
        spec = hermitian_spectrum(h)
        assert abs(sum(spec.eigenvalues) - h.trace().real) < 1e-10

    def test_spectrum_sorts_descending(self):
        assert Spectrum((0.1, 0.9)).eigenvalues == (0.9, 0.1)


class TestEntropy:
    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(DensityMatrix(np.eye(2) / 2)) == pytest.approx(1.0)

    def test_pure_state(self):
        assert von_neumann_entropy(DensityMatrix(np.diag([1.0, 0.0]))) == 0.0

    def test_five_eighths_three_eighths(self):
        rho = DensityMatrix(np.diag([5 / 8, 3 / 8]))
        assert von_neumann_entropy(rho) == pytest.approx(0.954434, abs=1e-6)

    def test_tiny_negative_eigenvalues_clipped(self):
        assert entropy_bits([1.0, -1e-12]) == 0.0

    def test_rejects_strongly_negative(self):
        with pytest.raises(InvalidStateError):
            entropy_bits([1.1, -0.1])

    @given(st.integers(0, 500))
    @settings(max_examples=30)
    def test_unitary_invariance(self, seed):
        rho = ginibre(4, seed)
        u = haar_unitary(4, seed + 7)
        rotated = DensityMatrix(u @ rho.matrix @ u.conj().T)
        assert abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) <= 1e-9


class TestDensityMatrixValidation:
    def test_rejects_non_hermitian(self):
        with pytest.raises(InvalidStateError):
            DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_rejects_wrong_trace(self):
        with pytest.raises(InvalidStateError):
            DensityMatrix(np.eye(2))

    def test_rejects_negative(self):
        with pytest.raises(InvalidStateError):
            DensityMatrix(np.diag([1.5, -0.5]))
