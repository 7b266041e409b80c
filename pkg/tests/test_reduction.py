import numpy as np
import pytest

from orbitdist import (
    Ambient,
    AmbientMismatchError,
    DimensionHypothesisError,
    GroupAction,
    InvalidRankError,
    ReducerBasis,
    build_reducer,
    orbit_distance,
    reduced_embedding,
    reduced_feature_dim,
    reducer_for,
    separating_subspace_basis,
)

SQRT2 = np.sqrt(2.0)


def random_low_rank_symmetric(rng, size, rank):
    m = np.zeros((size, size))
    for _ in range(rank // 2):
        u, v = rng.standard_normal((2, size))
        m += np.outer(u, v) + np.outer(v, u)
    if rank % 2:
        u = rng.standard_normal(size)
        m += np.outer(u, u)
    return m


class TestSeparatingSubspaceBasis:
    def test_full_rank_gives_empty_basis(self):
        assert separating_subspace_basis(4, 4) == []

    def test_hand_expanded_binomial(self):
        # (x - y)^2 = x^2 - 2xy + y^2 placed at entries (2,0), (1,1), (0,2)
        (b,) = separating_subspace_basis(3, 2)
        expected = np.array([[0.0, 0.0, 1.0], [0.0, -2.0, 0.0], [1.0, 0.0, 0.0]])
        np.testing.assert_array_equal(b, expected)

    def test_shifted_binomial(self):
        mats = separating_subspace_basis(4, 2)
        assert len(mats) == 4
        # x^i y^j shifts the pattern down/right by (i, j)
        np.testing.assert_array_equal(mats[1][2:, 1:2], [[1.0], [0.0]])
        stacked = np.array([m.ravel() for m in mats])
        assert np.linalg.matrix_rank(stacked) == 4

    @pytest.mark.parametrize("size", range(1, 11))
    def test_counts(self, size):
        for rank in range(1, size + 1):
            mats = separating_subspace_basis(size, rank)
            assert len(mats) == (size - rank) ** 2

    def test_invalid_rank(self):
        with pytest.raises(InvalidRankError):
            separating_subspace_basis(3, 0)
        with pytest.raises(InvalidRankError):
            separating_subspace_basis(3, 4)

    @pytest.mark.parametrize("size,rank", [(4, 2), (5, 2), (6, 4)])
    def test_closed_under_transpose_and_conjugation(self, size, rank):
        mats = separating_subspace_basis(size, rank)
        stacked = np.array([m.ravel() for m in mats])
        q, _ = np.linalg.qr(stacked.T)
        for m in mats:
            for moved in (m.T, m.conj()):
                v = moved.ravel()
                residual = v - q @ (q.T @ v)
                assert np.linalg.norm(residual) < 1e-10


class TestBuildReducer:
    def test_minimal_symmetric_case_is_full_space(self):
        # size 2 with rank 2: nothing to remove
        rb = build_reducer(1, 2, Ambient.SYMMETRIC)
        assert rb.dim == 3
        assert rb.intersection_dim == 0

    def test_documented_small_cases(self):
        rb = build_reducer(1, 3, Ambient.SYMMETRIC)
        assert (rb.dim, rb.intersection_dim) == (5, 1)
        rb = build_reducer(1, 3, Ambient.HERMITIAN)
        assert (rb.dim, rb.intersection_dim) == (8, 1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_dimension_formulas(self, n):
        for size in range(2 * n, 11):
            rb = build_reducer(n, size, Ambient.SYMMETRIC)
            assert rb.dim == n * (2 * size - 2 * n + 1)
            rb = build_reducer(n, size, Ambient.HERMITIAN)
            assert rb.dim == 4 * n * (size - n)

    def test_basis_orthonormal(self):
        for ambient in Ambient:
            rb = build_reducer(2, 7, ambient)
            gram = rb.basis @ rb.basis.T
            np.testing.assert_allclose(gram, np.eye(rb.dim), atol=1e-10)

    def test_rejects_small_size(self):
        with pytest.raises(DimensionHypothesisError):
            build_reducer(2, 3, Ambient.SYMMETRIC)


class TestProject:
    def test_zero_maps_to_zero(self):
        rb = build_reducer(1, 4, Ambient.SYMMETRIC)
        np.testing.assert_array_equal(rb.project(np.zeros((4, 4))), np.zeros(rb.dim))

    def test_fixes_vectors_already_in_complement(self, rng):
        # project a random symmetric matrix once; the result (pulled back)
        # must be fixed by a second projection with equal norm
        rb = build_reducer(1, 4, Ambient.SYMMETRIC)
        coords = rb.project(random_low_rank_symmetric(rng, 4, 4))
        pulled = np.zeros((4, 4))
        for c, row in zip(coords, rb.basis):
            pulled += c * row[:16].reshape(4, 4)
        again = rb.project(pulled)
        assert np.linalg.norm(again) == pytest.approx(np.linalg.norm(pulled), rel=1e-12)
        np.testing.assert_allclose(again, coords, atol=1e-10)

    @pytest.mark.parametrize("n,size", [(1, 4), (1, 5), (1, 6), (2, 5), (2, 6)])
    def test_wronskian_separation(self, rng, n, size):
        rb = build_reducer(n, size, Ambient.SYMMETRIC)
        for _ in range(100):
            m = random_low_rank_symmetric(rng, size, 2 * n)
            coords = rb.project(m)
            assert np.linalg.norm(coords) > 1e-8 * np.linalg.norm(m)

    def test_non_expansive(self, rng):
        rb = build_reducer(1, 5, Ambient.SYMMETRIC)
        for _ in range(200):
            g = rng.standard_normal((5, 5))
            m = g + g.T
            assert np.linalg.norm(rb.project(m)) <= np.linalg.norm(m) + 1e-12

    def test_hermitian_ambient(self, rng):
        rb = build_reducer(1, 3, Ambient.HERMITIAN)
        g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        m = g + g.conj().T
        coords = rb.project(m)
        assert coords.shape == (8,)
        assert np.linalg.norm(coords) <= np.linalg.norm(m) + 1e-12

    def test_rejects_asymmetric(self, rng):
        rb = build_reducer(1, 3, Ambient.SYMMETRIC)
        with pytest.raises(AmbientMismatchError):
            rb.project(rng.standard_normal((3, 3)))

    def test_symmetric_ambient_rejects_complex(self, rng):
        rb = build_reducer(1, 3, Ambient.SYMMETRIC)
        g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        with pytest.raises(AmbientMismatchError):
            rb.project(g + g.conj().T)


class TestReducedEmbedding:
    @pytest.mark.parametrize(
        "group,n,l",
        [
            (GroupAction.ORTHOGONAL, 1, 4),
            (GroupAction.ORTHOGONAL, 2, 5),
            (GroupAction.EUCLIDEAN, 1, 4),
            (GroupAction.UNITARY, 1, 3),
            (GroupAction.COMPLEX_EUCLIDEAN, 1, 4),
        ],
    )
    def test_output_length_and_invariance(self, rng, group, n, l):
        from test_metrics import apply_element, random_element

        a = rng.standard_normal((n, l))
        if group.is_complex:
            a = a + 1j * rng.standard_normal((n, l))
        f = reduced_embedding(group, a)
        assert f.shape == (reduced_feature_dim(group, n, l),)
        moved = apply_element(*random_element(rng, group, n), a)
        f2 = reduced_embedding(group, moved)
        assert np.linalg.norm(f - f2) <= 1e-9 * max(1.0, np.linalg.norm(a))

    def test_upper_bound_and_positive_lower(self, rng):
        group = GroupAction.ORTHOGONAL
        reducer = reducer_for(group, 1, 4)
        min_ratio = np.inf
        for _ in range(500):
            a, b = rng.standard_normal((2, 1, 4))
            d, _ = orbit_distance(group, a, b)
            if d < 1e-12:
                continue
            gap = np.linalg.norm(
                reduced_embedding(group, a, reducer) - reduced_embedding(group, b, reducer)
            )
            assert gap <= SQRT2 * d + 1e-8
            min_ratio = min(min_ratio, gap / d)
        assert min_ratio > 0.0

    def test_rejects_short_configurations(self, rng):
        with pytest.raises(DimensionHypothesisError):
            reduced_embedding(GroupAction.ORTHOGONAL, rng.standard_normal((2, 3)))
        with pytest.raises(DimensionHypothesisError):
            # euclidean loses one column to centering
            reduced_embedding(GroupAction.EUCLIDEAN, rng.standard_normal((2, 4)))

    def test_dim_formula_table(self):
        for n in range(1, 4):
            for l in range(2 * n, 9):
                assert reduced_feature_dim(GroupAction.ORTHOGONAL, n, l) == n * (2 * l - 2 * n + 1)
                assert reduced_feature_dim(GroupAction.UNITARY, n, l) == 4 * n * (l - n)
                if l - 1 >= 2 * n:
                    assert reduced_feature_dim(GroupAction.EUCLIDEAN, n, l) == n * (
                        2 * l - 2 * n - 1
                    )
                    assert reduced_feature_dim(GroupAction.COMPLEX_EUCLIDEAN, n, l) == 4 * n * (
                        l - n - 1
                    )


class TestSerialization:
    def test_json_round_trip(self):
        rb = build_reducer(1, 4, Ambient.HERMITIAN)
        restored = ReducerBasis.from_json(rb.to_json())
        assert restored.rank == rb.rank
        assert restored.size == rb.size
        assert restored.ambient == rb.ambient
        assert restored.dim == rb.dim
        np.testing.assert_array_equal(restored.basis, rb.basis)
