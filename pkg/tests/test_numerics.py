import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from supercavity.model import ModelParams, build_scatterer
from supercavity.numerics import MAX_EIGEN_DIM, SingularMatrixError, eigen, solve_linear
from supercavity.presets import preset_params


def random_matrix(rng, n, cond=None):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    if cond is None:
        return a
    u, _, vh = np.linalg.svd(a)
    s = np.geomspace(1.0, 1.0 / cond, n)
    return (u * s) @ vh


def relative_residual(a, x, b):
    return np.linalg.norm(a @ x - b) / (np.linalg.norm(a, "fro") * np.linalg.norm(x) + np.linalg.norm(b))


class TestSolveLinear:
    def test_identity(self):
        b = np.array([1 + 2j, -3, 0.5j])
        np.testing.assert_array_equal(solve_linear(np.eye(3), b), b)

    def test_permutation(self):
        np.testing.assert_allclose(solve_linear([[0, 1], [1, 0]], [1, 2]), [2, 1])

    def test_random_35(self, rng):
        a = random_matrix(rng, 35, cond=1e3)
        b = rng.normal(size=35) + 1j * rng.normal(size=35)
        assert relative_residual(a, solve_linear(a, b), b) <= 1e-10

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 60), st.floats(1.0, 1e6), st.integers(0, 2**31))
    def test_residual_property(self, n, cond, seed):
        rng = np.random.default_rng(seed)
        a = random_matrix(rng, n, cond)
        b = rng.normal(size=n) + 1j * rng.normal(size=n)
        assert relative_residual(a, solve_linear(a, b), b) <= 1e-10

    def test_needs_pivoting(self):
        a = np.array([[1e-20, 1], [1, 1]], dtype=complex)
        x = solve_linear(a, [1, 2])
        np.testing.assert_allclose(x, [1, 1], rtol=1e-12)

    def test_singular_reports_pivot(self):
        a = np.array([[1, 2], [2, 4]], dtype=complex)
        with pytest.raises(SingularMatrixError) as info:
            solve_linear(a, [1, 1])
        assert info.value.pivot < 1e-14

    def test_shape_errors(self):
        with pytest.raises(ValueError):
            solve_linear(np.ones((2, 3)), [1, 1])
        with pytest.raises(ValueError):
            solve_linear(np.eye(2), [1, 1, 1])
        with pytest.raises(ValueError):
            solve_linear([[np.nan, 0], [0, 1]], [1, 1])


class TestEigen:
    def test_diagonal(self):
        d = np.array([3.0, -1.0, 2.0 + 1j, 2.0 - 1j])
        dec = eigen(np.diag(d))
        np.testing.assert_array_equal(dec.eigenvalues, [-1.0, 2.0 - 1j, 2.0 + 1j, 3.0])
        np.testing.assert_allclose(np.abs(dec.eigenvectors), np.eye(4)[:, [1, 3, 2, 0]])

    def test_bare_cavity_spectrum(self):
        p = ModelParams(n_cavities=31, omega_a=0.0, eta=0.01, omega_rabi=0.0, atom_sites=(8, 12))
        block = build_scatterer(p).entries[:31, :31]
        expected = -2 * np.cos(np.arange(1, 32) * np.pi / 32)
        np.testing.assert_allclose(eigen(block).eigenvalues, expected, atol=1e-10, rtol=0)

    def test_hermitian_real(self, rng):
        a = random_matrix(rng, 20)
        h = a + a.conj().T
        assert np.max(np.abs(eigen(h).eigenvalues.imag)) <= 1e-12

    def test_pairs_and_norms(self, rng):
        a = random_matrix(rng, 30)
        dec = eigen(a)
        v, w = dec.eigenvectors, dec.eigenvalues
        np.testing.assert_allclose(np.linalg.norm(v, axis=0), 1.0, atol=1e-14)
        for i in range(len(dec)):
            assert np.linalg.norm(a @ v[:, i] - w[i] * v[:, i]) <= 1e-10 * np.linalg.norm(a, "fro")

    def test_sorted(self, rng):
        w = eigen(random_matrix(rng, 25)).eigenvalues
        keys = list(zip(w.real, w.imag))
        assert keys == sorted(keys)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 40), st.integers(0, 2**31))
    def test_reconstruction(self, n, seed):
        a = random_matrix(np.random.default_rng(seed), n)
        dec = eigen(a)
        v = dec.eigenvectors
        back = v @ np.diag(dec.eigenvalues) @ np.linalg.inv(v)
        assert np.linalg.norm(back - a) <= 1e-8 * np.linalg.norm(a)

    def test_deterministic(self, rng):
        a = random_matrix(rng, 30)
        d1, d2 = eigen(a), eigen(a.copy())
        np.testing.assert_array_equal(d1.eigenvalues, d2.eigenvalues)
        np.testing.assert_array_equal(d1.eigenvectors, d2.eigenvectors)

    def test_effective_hamiltonian_keeps_resonance(self, fig3):
        e4 = -2 * np.cos(np.pi / 8)
        h = build_scatterer(fig3, decaying=True).entries
        dec = eigen(h)
        i = np.argmin(np.abs(dec.eigenvalues.real - e4))
        lam = dec.eigenvalues[i]
        assert abs(lam.real - e4) <= 1e-10
        # oracle: lam is a root of det(H - lam I), i.e. H - lam I has a null direction
        smin = np.linalg.svd(h - lam * np.eye(len(h)), compute_uv=False)[-1]
        assert smin <= 1e-13

    def test_dimension_cap(self):
        with pytest.raises(ValueError):
            eigen(np.zeros((MAX_EIGEN_DIM + 1, 1)))
