import numpy as np
import pytest

from orbitdist import (
    OutOfRangeError,
    ShapeMismatchError,
    dist_euclidean,
    euclidean_embedding,
    side_lengths,
    side_lengths_counterexample,
    triangle_embedding,
    triangle_from_coords,
)

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)
SQRT6 = np.sqrt(6.0)

FLAT = np.array([[1.0, 0.0, -1.0], [0.0, 0.0, 0.0]])


def perturbed_flat(eps):
    return np.array([[1.0, 0.0, -1.0], [-eps, 2 * eps, -eps]])


def random_triangles(rng, count):
    return rng.standard_normal((count, 2, 3))


class TestSideLengths:
    def test_flat_triangle(self):
        np.testing.assert_allclose(side_lengths(FLAT), [1.0, 2.0, 1.0])

    def test_perturbed_flat_triangle(self):
        eps = 0.01
        s = np.sqrt(1 + 9 * eps**2)
        np.testing.assert_allclose(side_lengths(perturbed_flat(eps)), [s, 2.0, s])

    def test_coincident_vertices(self):
        t = np.ones((2, 3))
        np.testing.assert_allclose(side_lengths(t), [0.0, 0.0, 0.0])

    def test_rigid_motion_invariance(self, rng):
        t = random_triangles(rng, 1)[0]
        th = rng.uniform(0, 2 * np.pi)
        r = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
        moved = r @ t + rng.standard_normal(2)[:, None]
        np.testing.assert_allclose(side_lengths(moved), side_lengths(t), atol=1e-12)

    def test_cyclic_relabeling_cycles_lengths(self, rng):
        t = random_triangles(rng, 1)[0]
        relabeled = t[:, [1, 2, 0]]
        np.testing.assert_allclose(side_lengths(relabeled), np.roll(side_lengths(t), -1))

    def test_upper_lipschitz_sqrt3(self, rng):
        for _ in range(500):
            a, b = random_triangles(rng, 2)
            d, _ = dist_euclidean(a, b)
            gap = np.linalg.norm(side_lengths(a) - side_lengths(b))
            assert gap <= SQRT3 * d + 1e-9

    def test_rejects_wrong_shape(self, rng):
        with pytest.raises(ShapeMismatchError):
            side_lengths(rng.standard_normal((3, 3)))


class TestTriangleEmbedding:
    @pytest.mark.parametrize("s", [1.0, 0.5, 7.25])
    def test_equilateral(self, s):
        # equilateral: the edge Gram is (s^2/2) I, its root (s/sqrt 2) I,
        # so the coordinates collapse to (0, 0, s)
        t = s * np.array([[0.0, 1.0, 0.5], [0.0, 0.0, np.sqrt(3) / 2]])
        np.testing.assert_allclose(triangle_embedding(t), [0.0, 0.0, s], atol=1e-12)

    def test_coincident_points(self):
        np.testing.assert_allclose(triangle_embedding(np.ones((2, 3))), np.zeros(3))

    def test_cone_invariants(self, rng):
        for t in random_triangles(rng, 300):
            p, q, z = triangle_embedding(t)
            assert z >= -1e-12
            assert p * p + q * q <= z * z * (1 + 1e-10) + 1e-12

    def test_distance_identity_with_euclidean_feature(self, rng):
        # same pairwise distances as the general centered-Gram-root feature
        for _ in range(200):
            a, b = random_triangles(rng, 2)
            lhs = np.linalg.norm(triangle_embedding(a) - triangle_embedding(b))
            _, va = euclidean_embedding(a)
            _, vb = euclidean_embedding(b)
            assert lhs == pytest.approx(np.linalg.norm(va - vb), abs=1e-10)

    def test_sandwich(self, rng):
        for _ in range(500):
            a, b = random_triangles(rng, 2)
            d, _ = dist_euclidean(a, b)
            gap = np.linalg.norm(triangle_embedding(a) - triangle_embedding(b))
            assert d - 1e-9 <= gap <= SQRT2 * d + 1e-9

    def test_rigid_motion_invariance(self, rng):
        t = random_triangles(rng, 1)[0]
        moved = np.array([[0.0, -1.0], [1.0, 0.0]]) @ t + np.array([3.0, -2.0])[:, None]
        np.testing.assert_allclose(triangle_embedding(moved), triangle_embedding(t), atol=1e-10)


class TestConeSurjectivity:
    def test_cone_points_are_attained(self, rng):
        for _ in range(100):
            z = rng.uniform(0, 3)
            r = z * np.sqrt(rng.uniform(0, 1))
            th = rng.uniform(0, 2 * np.pi)
            target = np.array([r * np.cos(th), r * np.sin(th), z])
            t = triangle_from_coords(target)
            np.testing.assert_allclose(triangle_embedding(t), target, atol=1e-6)

    def test_cone_boundary(self):
        t = triangle_from_coords([1.0, 0.0, 1.0])
        np.testing.assert_allclose(triangle_embedding(t), [1.0, 0.0, 1.0], atol=1e-8)

    def test_rejects_points_outside_cone(self):
        with pytest.raises(OutOfRangeError):
            triangle_from_coords([1.0, 1.0, 1.0])
        with pytest.raises(OutOfRangeError):
            triangle_from_coords([0.0, 0.0, -1.0])


class TestCounterexample:
    def test_orbit_distance_is_sqrt6_eps(self):
        for eps in (1e-2, 1e-3, 1e-4):
            a, b, _ = side_lengths_counterexample(eps)
            d, _ = dist_euclidean(a, b)
            assert d == pytest.approx(SQRT6 * eps, rel=1e-9)

    def test_ratio_matches_asymptotic_slope(self):
        # d(sides) / d_orbit ~ (9 sqrt(2) / (2 sqrt(6))) eps for small eps
        slope = 9 * SQRT2 / (2 * SQRT6)
        for eps in (1e-3, 1e-4):
            _, _, ratio = side_lengths_counterexample(eps)
            assert ratio == pytest.approx(slope * eps, rel=1e-2)

    def test_ratio_value_at_1e3(self):
        _, _, ratio = side_lengths_counterexample(1e-3)
        assert ratio == pytest.approx(2.598e-3, rel=1e-2)

    def test_ratio_vanishes_monotonically(self):
        for eps in (1e-2, 1e-3):
            _, _, r_full = side_lengths_counterexample(eps)
            _, _, r_half = side_lengths_counterexample(eps / 2)
            assert r_half < r_full

    @pytest.mark.parametrize("eps", [0.0, -1e-3, 0.1, 0.5])
    def test_rejects_out_of_range(self, eps):
        with pytest.raises(OutOfRangeError):
            side_lengths_counterexample(eps)
