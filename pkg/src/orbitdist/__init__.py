"""Orbit distances and bi-Lipschitz invariant embeddings for tuples of
points under orthogonal, euclidean, unitary, and complex-euclidean group
actions."""

from .errors import (
    AmbientMismatchError,
    ConfigInvalidError,
    ConvergenceFailureError,
    DimensionHypothesisError,
    EmptyDatabaseError,
    FeatureMapMismatchError,
    InvalidRankError,
    NonFiniteError,
    NotHermitianError,
    NotPSDError,
    OrbitDistError,
    OutOfRangeError,
    ShapeMismatchError,
    UnknownIdError,
)
from .linalg import (
    EigenFactors,
    SvdFactors,
    eigh,
    frobenius_dist,
    frobenius_norm,
    nuclear_norm,
    psd_sqrt,
    svd,
)
from .metrics import (
    Alignment,
    GroupAction,
    center,
    dist_complex_euclidean,
    dist_euclidean,
    dist_orthogonal,
    dist_unitary,
    orbit_distance,
)
from .embeddings import (
    complex_euclidean_embedding,
    embedding_for,
    euclidean_embedding,
    feature_dim,
    herm_flatten,
    mean_last_basis,
    orthogonal_embedding,
    reduced_block,
    sym_flatten,
    unitary_embedding,
)
from .reduction import (
    Ambient,
    ReducerBasis,
    build_reducer,
    reduced_embedding,
    reduced_feature_dim,
    reducer_for,
    separating_subspace_basis,
)
from .triangles import (
    edge_gram,
    side_lengths,
    side_lengths_counterexample,
    triangle_embedding,
    triangle_from_coords,
)
from .features import FULL, REDUCED, feature_length, feature_vector
from .search import QueryResult, ShapeDatabase, feature_nearest, linear_scan_nearest, verify
from .experiments import (
    MAP_EXACT,
    MAP_SIDE_LENGTHS,
    MAP_TRIANGLE,
    ExperimentConfig,
    ExperimentReport,
    classification_experiment,
    distortion_experiment,
    lower_constant_survey,
)

__version__ = "0.1.0"

__all__ = [
    "Alignment",
    "Ambient",
    "AmbientMismatchError",
    "ConfigInvalidError",
    "ConvergenceFailureError",
    "DimensionHypothesisError",
    "EigenFactors",
    "EmptyDatabaseError",
    "ExperimentConfig",
    "ExperimentReport",
    "FULL",
    "FeatureMapMismatchError",
    "GroupAction",
    "InvalidRankError",
    "MAP_EXACT",
    "MAP_SIDE_LENGTHS",
    "MAP_TRIANGLE",
    "NonFiniteError",
    "NotHermitianError",
    "NotPSDError",
    "OrbitDistError",
    "OutOfRangeError",
    "QueryResult",
    "REDUCED",
    "ReducerBasis",
    "ShapeDatabase",
    "ShapeMismatchError",
    "SvdFactors",
    "UnknownIdError",
    "build_reducer",
    "center",
    "classification_experiment",
    "complex_euclidean_embedding",
    "dist_complex_euclidean",
    "dist_euclidean",
    "dist_orthogonal",
    "dist_unitary",
    "distortion_experiment",
    "edge_gram",
    "eigh",
    "embedding_for",
    "euclidean_embedding",
    "feature_dim",
    "feature_length",
    "feature_nearest",
    "feature_vector",
    "frobenius_dist",
    "frobenius_norm",
    "herm_flatten",
    "linear_scan_nearest",
    "lower_constant_survey",
    "mean_last_basis",
    "nuclear_norm",
    "orbit_distance",
    "orthogonal_embedding",
    "psd_sqrt",
    "reduced_block",
    "reduced_embedding",
    "reduced_feature_dim",
    "reducer_for",
    "separating_subspace_basis",
    "side_lengths",
    "side_lengths_counterexample",
    "svd",
    "sym_flatten",
    "triangle_embedding",
    "triangle_from_coords",
    "unitary_embedding",
    "verify",
]
