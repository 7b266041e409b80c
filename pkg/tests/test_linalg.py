import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitdist import (
    NonFiniteError,
    NotHermitianError,
    NotPSDError,
    ShapeMismatchError,
    frobenius_dist,
    nuclear_norm,
    psd_sqrt,
    svd,
)
from orbitdist.linalg import ORTH_TOL, RECON_TOL

from oracles import nuclear_norm_by_gram


class TestSvd:
    def test_identity(self):
        u, s, v = svd(np.eye(3))
        np.testing.assert_allclose(s, [1.0, 1.0, 1.0])
        np.testing.assert_allclose(u @ np.diag(s) @ v.T, np.eye(3), atol=1e-12)

    def test_diagonal_with_sign(self):
        # singular values are the absolute diagonal entries
        _, s, _ = svd(np.diag([3.0, -4.0]))
        np.testing.assert_allclose(s, [4.0, 3.0])

    @pytest.mark.parametrize("shape", [(4, 6), (6, 4), (3, 3)])
    @pytest.mark.parametrize("complex_entries", [False, True])
    def test_reconstruction_and_factor_invariants(self, rng, shape, complex_entries):
        m = rng.standard_normal(shape)
        if complex_entries:
            m = m + 1j * rng.standard_normal(shape)
        u, s, v = svd(m)
        r = min(shape)
        assert u.shape == (shape[0], r) and v.shape == (shape[1], r)
        assert np.all(np.diff(s) <= 0) and np.all(s >= 0)
        assert np.abs(u.conj().T @ u - np.eye(r)).max() < ORTH_TOL
        assert np.abs(v.conj().T @ v - np.eye(r)).max() < ORTH_TOL
        recon = u @ np.diag(s) @ v.conj().T
        assert np.linalg.norm(recon - m) <= RECON_TOL * np.linalg.norm(m)

    def test_real_input_gives_real_factors(self, rng):
        u, s, v = svd(rng.standard_normal((3, 5)))
        assert not np.iscomplexobj(u) and not np.iscomplexobj(v)

    def test_rejects_nan(self):
        with pytest.raises(NonFiniteError):
            svd(np.array([[1.0, np.nan], [0.0, 1.0]]))

    def test_rejects_inf(self):
        with pytest.raises(NonFiniteError):
            svd(np.array([[1.0, np.inf], [0.0, 1.0]]))


class TestNuclearNorm:
    def test_identity(self):
        assert nuclear_norm(np.eye(5)) == pytest.approx(5.0)

    def test_diagonal(self):
        assert nuclear_norm(np.diag([3.0, -4.0])) == pytest.approx(7.0)

    @pytest.mark.parametrize("complex_entries", [False, True])
    def test_matches_gram_eigenvalue_oracle(self, rng, complex_entries):
        for _ in range(20):
            m = rng.standard_normal((3, 5))
            if complex_entries:
                m = m + 1j * rng.standard_normal((3, 5))
            assert nuclear_norm(m) == pytest.approx(nuclear_norm_by_gram(m), rel=1e-10)

    def test_bounds_frobenius_and_trace(self, rng):
        for _ in range(50):
            m = rng.standard_normal((4, 4))
            nuc = nuclear_norm(m)
            assert nuc >= np.linalg.norm(m) - 1e-12
            assert nuc >= abs(np.trace(m).real) - 1e-12

    def test_trace_equality_for_psd(self, rng):
        g = rng.standard_normal((5, 5))
        b = g @ g.T
        assert nuclear_norm(b) == pytest.approx(np.trace(b), rel=1e-10)


class TestPsdSqrt:
    def test_identity(self):
        np.testing.assert_allclose(psd_sqrt(np.eye(2)), np.eye(2), atol=1e-12)

    def test_diagonal(self):
        np.testing.assert_allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-12)

    def test_zero(self):
        np.testing.assert_allclose(psd_sqrt(np.zeros((3, 3))), np.zeros((3, 3)))

    @pytest.mark.parametrize("size", range(2, 9))
    @pytest.mark.parametrize("complex_entries", [False, True])
    def test_square_of_root_reconstructs_gram(self, rng, size, complex_entries):
        g = rng.standard_normal((size, size))
        if complex_entries:
            g = g + 1j * rng.standard_normal((size, size))
        b = g.conj().T @ g
        r = psd_sqrt(b)
        assert np.linalg.norm(r - r.conj().T) < 1e-12 * max(1.0, np.linalg.norm(r))
        assert np.min(np.linalg.eigvalsh(r)) > -1e-10
        assert np.linalg.norm(r @ r - b) <= 1e-10 * np.linalg.norm(b)
        if not complex_entries:
            assert not np.iscomplexobj(r)

    def test_rank_deficient_gram(self, rng):
        g = rng.standard_normal((2, 4))
        b = g.T @ g  # rank 2 out of 4
        r = psd_sqrt(b)
        assert np.linalg.norm(r @ r - b) <= 1e-10 * np.linalg.norm(b)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotHermitianError):
            psd_sqrt(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_rejects_negative_definite(self):
        with pytest.raises(NotPSDError):
            psd_sqrt(np.diag([1.0, -0.5]))

    def test_clamps_roundoff_negatives(self):
        b = np.diag([1.0, -1e-12])
        r = psd_sqrt(b)
        assert r[1, 1] == 0.0


class TestFrobeniusDist:
    def test_self_distance_zero(self, rng):
        m = rng.standard_normal((3, 4))
        assert frobenius_dist(m, m) == 0.0

    def test_zero_vs_identity(self):
        assert frobenius_dist(np.zeros((2, 2)), np.eye(2)) == pytest.approx(np.sqrt(2.0))

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            frobenius_dist(np.zeros((2, 2)), np.zeros((2, 3)))

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=30, deadline=None)
    def test_matches_entrywise_sum(self, seed):
        r = np.random.default_rng(seed)
        a, b = r.standard_normal((2, 3, 4))
        expected = np.sqrt(((a - b) ** 2).sum())
        assert frobenius_dist(a, b) == pytest.approx(expected, rel=1e-12)
