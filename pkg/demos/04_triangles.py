"""Planar triangles: side lengths versus the bi-Lipschitz embedding.

The classical invariant of a triangle -- its three side lengths --
separates congruence classes but distorts distances badly: nearly
degenerate triangles that are far apart as orbits can have nearly equal
side lengths.  The three-coordinate embedding read off the square root of
an edge Gram matrix has no such defect.
"""
import numpy as np

from orbitdist import (
    dist_euclidean,
    side_lengths,
    side_lengths_counterexample,
    triangle_embedding,
    triangle_from_coords,
)

# --- the two invariants of one triangle ----------------------------------
T = np.array([[0.0, 3.0, 1.0], [0.0, 0.0, 2.0]])
print("triangle vertices (columns):\n", T)
print("side lengths:        ", np.round(side_lengths(T), 4))
print("embedding coordinates:", np.round(triangle_embedding(T), 4))

# equilateral triangles land on the cone axis (0, 0, side)
eq = np.array([[0.0, 1.0, 0.5], [0.0, 0.0, np.sqrt(3) / 2]])
print("equilateral, side 1:  ", np.round(triangle_embedding(eq), 12))

# --- the side-length map is not bi-Lipschitz ------------------------------
# a flat triangle and a slightly bent copy: the orbit distance scales like
# eps but the side lengths only move like eps^2
print("\n   eps     d_orbit      d_sides     ratio (-> 0)")
for eps in (1e-1 / 2, 1e-2, 1e-3, 1e-4):
    A, B, ratio = side_lengths_counterexample(eps)
    d, _ = dist_euclidean(A, B)
    print(f"  {eps:7.0e}  {d:.8f}  {np.linalg.norm(side_lengths(A) - side_lengths(B)):.10f}  {ratio:.6f}")

# --- the embedding keeps both bounds --------------------------------------
rng = np.random.default_rng(4)
lo, hi = np.inf, 0.0
for _ in range(5000):
    A, B = rng.standard_normal((2, 2, 3))
    d, _ = dist_euclidean(A, B)
    if d < 1e-9:
        continue
    r = np.linalg.norm(triangle_embedding(A) - triangle_embedding(B)) / d
    lo, hi = min(lo, r), max(hi, r)
print(f"\nembedding ratio over 5000 random pairs: [{lo:.4f}, {hi:.4f}]  (theory: [1, 1.4142])")

# --- the image is exactly a round cone, and it can be inverted -------------
target = np.array([0.3, -0.4, 0.9])  # x^2 + y^2 = 0.25 <= 0.81 = z^2
T = triangle_from_coords(target)
print("\ntriangle hitting coordinates", target, ":\n", np.round(T, 6))
print("re-embedded:", np.round(triangle_embedding(T), 12))
