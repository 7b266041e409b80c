"""Canonical flattened feature vectors used by databases and the CLI.

``feature_vector`` is the single entry point that search structures and
file formats rely on, so a database built by one code path can always be
queried by another.  For the euclidean action on planar triangles (2x3
real inputs) it returns the three triangle coordinates, which carry the
same pairwise distances as the generic euclidean feature in the same
number of dimensions.
"""
from __future__ import annotations

import numpy as np

from .embeddings import embedding_for, feature_dim
from .errors import FeatureMapMismatchError
from .linalg import as_matrix
from .metrics import GroupAction
from .reduction import ReducerBasis, reduced_embedding, reduced_feature_dim, reducer_for
from .triangles import triangle_embedding

FULL = "full"
REDUCED = "reduced"


def feature_vector(
    group: GroupAction,
    a,
    feature_map: str = FULL,
    reducer: ReducerBasis | None = None,
) -> np.ndarray:
    """Flattened invariant feature of a configuration."""
    m = as_matrix(a)
    if feature_map == FULL:
        if group is GroupAction.EUCLIDEAN and m.shape == (2, 3) and not np.iscomplexobj(m):
            return triangle_embedding(m)
        return embedding_for(group, m)[1]
    if feature_map == REDUCED:
        return reduced_embedding(group, m, reducer)
    raise FeatureMapMismatchError(f"unknown feature map {feature_map!r}")


def feature_length(group: GroupAction, n: int, l: int, feature_map: str = FULL) -> int:
    """Length of the vector :func:`feature_vector` produces."""
    if feature_map == FULL:
        return feature_dim(group, l)
    if feature_map == REDUCED:
        return reduced_feature_dim(group, n, l)
    raise FeatureMapMismatchError(f"unknown feature map {feature_map!r}")


def reducer_if_needed(group: GroupAction, n: int, l: int, feature_map: str) -> ReducerBasis | None:
    """Build the reducer once for repeated embedding calls."""
    return reducer_for(group, n, l) if feature_map == REDUCED else None
