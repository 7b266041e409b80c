"""Invariant feature maps with distortion at most sqrt(2).

Each map sends a configuration to the positive semi-definite square root
of its Gram matrix of pairwise inner products.  The Gram matrix is a
complete invariant of the rotation orbit, and taking its PSD square root
restores Lipschitz behaviour: euclidean distances between features
sandwich the orbit distance within a factor of sqrt(2).  The euclidean
variants center the configuration first, which quotients translations.

Matrix-valued features are flattened to real coordinate vectors by an
isometry (off-diagonal entries picking up a sqrt(2) weight), so vector
distances equal Frobenius distances exactly.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import ShapeMismatchError
from .linalg import as_matrix, svd
from .metrics import GroupAction, center

_SQRT2 = np.sqrt(2.0)


def gram_root(a) -> np.ndarray:
    """PSD square root of the Gram matrix ``A* A`` of a configuration.

    Computed from the thin SVD of A itself (A = U S V* gives the root
    V S V*) rather than by eigendecomposing the formed Gram: squaring A
    first would halve the attainable precision whenever the Gram is
    rank-deficient, i.e. whenever there are more points than dimensions.
    """
    m = as_matrix(a)
    _, s, v = svd(m)
    r = (v * s) @ v.conj().T
    return 0.5 * (r + r.conj().T)


def sym_flatten(m) -> np.ndarray:
    """Isometric coordinates of a real symmetric matrix.

    Diagonal entries as-is, strict upper triangle scaled by sqrt(2);
    length l(l+1)/2.  Euclidean distance between two flattenings equals
    the Frobenius distance between the matrices.
    """
    a = as_matrix(m)
    iu = np.triu_indices(a.shape[0], k=1)
    return np.concatenate([np.diag(a), _SQRT2 * a[iu]])


def herm_flatten(m) -> np.ndarray:
    """Isometric real coordinates of a Hermitian matrix.

    Real diagonal, then sqrt(2)-scaled real and imaginary parts of the
    strict upper triangle; length l^2.
    """
    a = as_matrix(m)
    iu = np.triu_indices(a.shape[0], k=1)
    off = a[iu]
    return np.concatenate([np.diag(a).real, _SQRT2 * off.real, _SQRT2 * off.imag])


@lru_cache(maxsize=None)
def mean_last_basis(l: int) -> np.ndarray:
    """Fixed orthogonal l-by-l matrix whose last column is the normalized
    all-ones vector.

    Built by orthonormalizing (ones/sqrt(l), e_1, ..., e_{l-1}) and moving
    the ones-column to the end, so the choice is deterministic and features
    are reproducible across runs.
    """
    ones = np.full(l, 1.0 / np.sqrt(l))
    cols = [ones]
    for k in range(l - 1):
        v = np.zeros(l)
        v[k] = 1.0
        for c in cols:
            v -= (c @ v) * c
        v /= np.linalg.norm(v)
        cols.append(v)
    w = np.column_stack(cols[1:] + [ones])
    w.setflags(write=False)
    return w


def reduced_block(m) -> np.ndarray:
    """Compress a matrix annihilating the all-ones vector to its
    (l-1)-by-(l-1) block in the :func:`mean_last_basis` coordinates."""
    a = as_matrix(m)
    w = mean_last_basis(a.shape[0])
    return (w.T @ a @ w)[:-1, :-1]


def orthogonal_embedding(a) -> tuple[np.ndarray, np.ndarray]:
    """Feature of a real configuration under the orthogonal action.

    Returns the PSD square root of the l-by-l Gram matrix together with
    its isometric flattening (length l(l+1)/2).
    """
    m = as_matrix(a)
    if np.iscomplexobj(m):
        raise ShapeMismatchError("orthogonal embedding requires a real configuration")
    s = gram_root(m)
    return s, sym_flatten(s)


def euclidean_embedding(a) -> tuple[np.ndarray, np.ndarray]:
    """Feature under the euclidean action: embed the centered configuration.

    The matrix annihilates the all-ones vector, so the flattening keeps
    only the (l-1)-by-(l-1) block (length l(l-1)/2).
    """
    m = as_matrix(a)
    if np.iscomplexobj(m):
        raise ShapeMismatchError("euclidean embedding requires a real configuration")
    s = gram_root(center(m))
    return s, sym_flatten(reduced_block(s))


def unitary_embedding(a) -> tuple[np.ndarray, np.ndarray]:
    """Feature of a complex configuration under the unitary action.

    Returns the Hermitian PSD square root of the Gram matrix ``A* A`` and
    its real isometric flattening (length l^2).
    """
    m = as_matrix(np.asarray(a, dtype=np.complex128))
    h = gram_root(m)
    return h, herm_flatten(h)


def complex_euclidean_embedding(a) -> tuple[np.ndarray, np.ndarray]:
    """Feature under the complex-euclidean action (length (l-1)^2)."""
    m = as_matrix(np.asarray(a, dtype=np.complex128))
    h = gram_root(center(m))
    return h, herm_flatten(reduced_block(h))


_EMBEDDINGS = {
    GroupAction.ORTHOGONAL: orthogonal_embedding,
    GroupAction.EUCLIDEAN: euclidean_embedding,
    GroupAction.UNITARY: unitary_embedding,
    GroupAction.COMPLEX_EUCLIDEAN: complex_euclidean_embedding,
}


def embedding_for(group: GroupAction, a) -> tuple[np.ndarray, np.ndarray]:
    """Matrix feature and flattened coordinates for ``group``."""
    return _EMBEDDINGS[group](a)


def feature_dim(group: GroupAction, l: int) -> int:
    """Length of the flattened feature vector for an l-point configuration."""
    if group is GroupAction.ORTHOGONAL:
        return l * (l + 1) // 2
    if group is GroupAction.EUCLIDEAN:
        return l * (l - 1) // 2
    if group is GroupAction.UNITARY:
        return l * l
    return (l - 1) ** 2
