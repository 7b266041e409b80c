"""Dimension reduction of the matrix-valued features.

The square-root features of rank-n configurations live on the variety of
low-rank matrices, which admits a linear projection that stays injective
(with positive lower Lipschitz constant) onto a much smaller subspace.
The subspace removed is spanned by coefficient matrices of the bivariate
polynomials ``(x - y)^r x^i y^j`` under the identification that places the
coefficient of ``x^a y^b`` at entry (a, b): a Wronskian argument shows this
span meets the rank-<=r matrices only at zero, so projecting onto its
orthogonal complement never collapses a difference of two features.

The reducer basis is an orthonormal real basis of the projected image of
the ambient space (real symmetric or Hermitian matrices), so projecting is
a plain inner-product evaluation and is non-expansive.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    AmbientMismatchError,
    DimensionHypothesisError,
    InvalidRankError,
    ShapeMismatchError,
)
from .linalg import HERM_TOL, as_matrix
from .metrics import GroupAction
from . import embeddings

_SQRT2 = np.sqrt(2.0)


class Ambient(enum.Enum):
    """Real matrix space the reducer operates on."""

    SYMMETRIC = "symmetric"
    HERMITIAN = "hermitian"


def separating_subspace_basis(size: int, rank: int) -> list[np.ndarray]:
    """Coefficient matrices of ``(x - y)^rank x^i y^j``, 0 <= i, j < size - rank.

    Returns (size - rank)^2 linearly independent size-by-size matrices whose
    span intersects the matrices of rank <= rank only at zero.
    """
    if rank <= 0 or rank > size:
        raise InvalidRankError(f"rank must satisfy 0 < rank <= size, got rank={rank}, size={size}")
    binom = np.zeros(rank + 1)
    binom[0] = 1.0
    for k in range(1, rank + 1):
        binom[k] = binom[k - 1] * (rank - k + 1) / k
    signed = binom * (-1.0) ** np.arange(rank + 1)
    out = []
    for i in range(size - rank):
        for j in range(size - rank):
            m = np.zeros((size, size))
            # (x-y)^rank = sum_k (-1)^k C(rank,k) x^(rank-k) y^k, shifted by x^i y^j
            for k in range(rank + 1):
                m[rank - k + i, k + j] = signed[k]
            out.append(m)
    return out


def _vec_real(m: np.ndarray) -> np.ndarray:
    """Isometric real coordinates of a complex matrix (real inner product
    Re trace(A B*) becomes the euclidean dot product)."""
    c = np.asarray(m, dtype=np.complex128)
    return np.concatenate([c.real.ravel(), c.imag.ravel()])


def _ambient_basis(size: int, ambient: Ambient) -> list[np.ndarray]:
    """Canonical orthonormal basis matrices of the ambient space, ordered to
    match the flattening in :mod:`embeddings`."""
    basis: list[np.ndarray] = []
    for i in range(size):
        e = np.zeros((size, size))
        e[i, i] = 1.0
        basis.append(e)
    for i in range(size):
        for j in range(i + 1, size):
            e = np.zeros((size, size))
            e[i, j] = e[j, i] = 1.0 / _SQRT2
            basis.append(e)
    if ambient is Ambient.HERMITIAN:
        for i in range(size):
            for j in range(i + 1, size):
                e = np.zeros((size, size), dtype=complex)
                e[i, j] = 1j / _SQRT2
                e[j, i] = -1j / _SQRT2
                basis.append(e)
    return basis


def _intersection_basis(size: int, rank: int, ambient: Ambient) -> list[np.ndarray]:
    """Spanning set of the intersection of the separating subspace with the
    ambient space.

    The coefficient matrices are real with transpose sending (i, j) to
    (j, i), so symmetric members come from symmetrized index pairs and the
    Hermitian case adds the antisymmetric pairs with an i factor.
    """
    raw = separating_subspace_basis(size, rank)
    m = size - rank
    b = lambda i, j: raw[i * m + j]
    out: list[np.ndarray] = []
    for i in range(m):
        out.append(b(i, i))
        for j in range(i + 1, m):
            out.append(b(i, j) + b(j, i))
    if ambient is Ambient.HERMITIAN:
        for i in range(m):
            for j in range(i + 1, m):
                out.append(1j * (b(i, j) - b(j, i)))
    return out


@dataclass(frozen=True)
class ReducerBasis:
    """Orthonormal basis of the reduced feature space.

    ``basis`` has one row per output coordinate, expressed in the real
    coordinates of the full matrix space; ``dim`` counts the rows and
    ``intersection_dim`` records how many ambient dimensions were removed.
    """

    rank: int
    size: int
    ambient: Ambient
    basis: np.ndarray
    dim: int
    intersection_dim: int

    def project(self, m) -> np.ndarray:
        """Coordinates of the projection of an ambient-space matrix.

        Non-expansive: the coordinate norm never exceeds the Frobenius
        norm of the input.  Raises AmbientMismatchError when the matrix is
        not (numerically) in the declared ambient space.
        """
        a = as_matrix(m)
        if a.shape != (self.size, self.size):
            raise ShapeMismatchError(f"expected {self.size}x{self.size} matrix, got {a.shape}")
        scale = max(1.0, float(np.linalg.norm(a)))
        if np.linalg.norm(a - a.conj().T) > HERM_TOL * scale:
            raise AmbientMismatchError("matrix is not symmetric/Hermitian")
        if self.ambient is Ambient.SYMMETRIC and np.iscomplexobj(a) and np.abs(a.imag).max() > HERM_TOL * scale:
            raise AmbientMismatchError("symmetric ambient requires a real matrix")
        return self.basis @ _vec_real(a)

    def to_json(self) -> str:
        """Serialize to a JSON string that reconstructs the exact basis."""
        payload = {
            "rank": self.rank,
            "size": self.size,
            "ambient": self.ambient.value,
            "dim": self.dim,
            "intersection_dim": self.intersection_dim,
            "basis": [[float(x) for x in row] for row in self.basis],
        }
        return json.dumps(payload, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "ReducerBasis":
        d = json.loads(text)
        basis = np.array(d["basis"], dtype=float)
        return ReducerBasis(
            rank=int(d["rank"]),
            size=int(d["size"]),
            ambient=Ambient(d["ambient"]),
            basis=basis,
            dim=int(d["dim"]),
            intersection_dim=int(d["intersection_dim"]),
        )


def _orthonormal_columns(cols: np.ndarray) -> np.ndarray:
    """QR-orthonormalize full-column-rank columns (unit-normalized first)."""
    if cols.shape[1] == 0:
        return cols
    cols = cols / np.linalg.norm(cols, axis=0, keepdims=True)
    q, _ = np.linalg.qr(cols)
    return q


@lru_cache(maxsize=None)
def build_reducer(n: int, size: int, ambient: Ambient) -> ReducerBasis:
    """Orthonormal reducer for rank parameter 2n on size-by-size matrices.

    Requires size >= 2n.  The output dimension is n(2*size - 2n + 1) for
    the symmetric ambient and 4n(size - n) for the Hermitian one.
    """
    if n <= 0:
        raise InvalidRankError(f"point dimension must be positive, got {n}")
    if size < 2 * n:
        raise DimensionHypothesisError(
            f"need size >= 2n for rank-2n separation, got size={size}, n={n}"
        )
    rank = 2 * n
    amb_cols = np.column_stack([_vec_real(b) for b in _ambient_basis(size, ambient)])
    if size == rank:
        q_w = np.zeros((amb_cols.shape[0], 0))
        k_int = 0
        v_cols = amb_cols
    else:
        w_mats = separating_subspace_basis(size, rank)
        w_cols = np.column_stack(
            [_vec_real(b) for b in w_mats] + [_vec_real(1j * b) for b in w_mats]
        )
        q_w = _orthonormal_columns(w_cols)
        int_cols = np.column_stack([_vec_real(b) for b in _intersection_basis(size, rank, ambient)])
        q_int = _orthonormal_columns(int_cols)
        k_int = q_int.shape[1]
        # complement of the intersection inside the ambient space; the
        # singular values split exactly into ones and zeros, so the cut
        # at 0.5 is unambiguous
        c = amb_cols - q_int @ (q_int.T @ amb_cols)
        u, s, _ = np.linalg.svd(c, full_matrices=False)
        v_cols = u[:, s > 0.5]
    r = v_cols - q_w @ (q_w.T @ v_cols)
    q = _orthonormal_columns(r)
    return ReducerBasis(
        rank=rank,
        size=size,
        ambient=ambient,
        basis=np.ascontiguousarray(q.T),
        dim=q.shape[1],
        intersection_dim=k_int,
    )


_AMBIENTS = {
    GroupAction.ORTHOGONAL: Ambient.SYMMETRIC,
    GroupAction.EUCLIDEAN: Ambient.SYMMETRIC,
    GroupAction.UNITARY: Ambient.HERMITIAN,
    GroupAction.COMPLEX_EUCLIDEAN: Ambient.HERMITIAN,
}


def _block_size(group: GroupAction, l: int) -> int:
    return l - 1 if group.quotients_translations else l


def reducer_for(group: GroupAction, n: int, l: int) -> ReducerBasis:
    """Reducer matching the feature map of ``group`` on n-by-l inputs."""
    size = _block_size(group, l)
    if size < 2 * n:
        raise DimensionHypothesisError(
            f"group {group.value} with l={l} admits reduction only for l >= "
            f"{2 * n + (1 if group.quotients_translations else 0)} at n={n}"
        )
    return build_reducer(n, size, _AMBIENTS[group])


def reduced_feature_dim(group: GroupAction, n: int, l: int) -> int:
    """Output length of :func:`reduced_embedding` for each group action."""
    size = _block_size(group, l)
    if _AMBIENTS[group] is Ambient.SYMMETRIC:
        return n * (2 * size - 2 * n + 1)
    return 4 * n * (size - n)


def reduced_embedding(group: GroupAction, a, reducer: ReducerBasis | None = None) -> np.ndarray:
    """Lower-dimensional invariant feature: project the matrix feature of
    ``group`` onto the separating complement.

    Output length is n(2l-2n+1) / n(2l-2n-1) / 4n(l-n) / 4n(l-n-1) for the
    orthogonal / euclidean / unitary / complex-euclidean actions.
    """
    m = as_matrix(a)
    n, l = m.shape
    if reducer is None:
        reducer = reducer_for(group, n, l)
    mat, _ = embeddings.embedding_for(group, m)
    if group.quotients_translations:
        mat = embeddings.reduced_block(mat)
    if reducer.size != mat.shape[0] or reducer.rank != 2 * n:
        raise ShapeMismatchError(
            f"reducer built for rank {reducer.rank}, size {reducer.size} does not match "
            f"a {n}x{l} input under group {group.value}"
        )
    return reducer.project(mat)
