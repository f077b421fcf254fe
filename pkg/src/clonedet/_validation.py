"""Shared input-validation helpers for the estimator surfaces."""
from __future__ import annotations

import numpy as np
from sklearn.exceptions import NotFittedError

__all__ = ["check_masked_matrix", "check_fitted", "as_float_matrix"]


def as_float_matrix(X, name: str = "X") -> np.ndarray:
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    return arr


def check_masked_matrix(X, n_features: int | None = None, name: str = "X") -> np.ndarray:
    """Validate a matrix that may carry NaN for missing entries."""
    arr = as_float_matrix(X, name)
    if np.isinf(arr).any():
        raise ValueError(f"{name} contains infinite values")
    if n_features is not None and arr.shape[1] != n_features:
        raise ValueError(f"{name} has {arr.shape[1]} columns, expected {n_features}")
    return arr


def check_fitted(estimator, attribute: str) -> None:
    if getattr(estimator, attribute, None) is None:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted; call fit() first"
        )
