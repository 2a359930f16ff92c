"""Input validation helpers shared by the estimators."""

from __future__ import annotations

import numbers
from typing import Iterable, Sequence

import numpy as np
from sklearn.utils.validation import check_array

ORIENTATIONS = ("higher", "lower")


def check_pool(X, *, estimator=None) -> np.ndarray:
    """Validate raw values as a float (n_players, n_terms) array.

    A 1-d input is treated as a single term. Non-finite entries are allowed;
    they stand for the WORST sentinel.
    """
    X = np.asarray(X, dtype=float) if not hasattr(X, "dtype") else X
    if np.ndim(X) == 1:
        X = np.reshape(X, (-1, 1))
    return check_array(
        X,
        dtype=np.float64,
        ensure_all_finite=False,
        ensure_min_samples=1,
        estimator=estimator,
        input_name="X",
    )


def check_orientations(orientation, n_terms: int) -> tuple[str, ...]:
    if isinstance(orientation, str):
        orientation = (orientation,) * n_terms
    orientation = tuple(orientation)
    if len(orientation) != n_terms:
        raise ValueError(f"expected {n_terms} orientations, got {len(orientation)}")
    for o in orientation:
        if o not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {o!r}")
    return orientation


def check_weights(weight, n_terms: int) -> np.ndarray:
    if isinstance(weight, numbers.Real):
        weight = (weight,) * n_terms
    w = np.asarray(weight, dtype=float)
    if w.shape != (n_terms,):
        raise ValueError(f"expected {n_terms} weights, got shape {w.shape}")
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError(f"weights must be finite and > 0, got {list(w)}")
    return w


def check_unique_ids(ids: Sequence[str], what: str = "player_id") -> None:
    seen: set[str] = set()
    for pid in ids:
        if pid in seen:
            raise ValueError(f"duplicate {what} {pid!r}")
        seen.add(pid)


def check_nonnegative_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
    return int(value)


def check_disjoint(a: Iterable[str], b: Iterable[str], what: str) -> None:
    both = sorted(set(a) & set(b))
    if both:
        raise ValueError(f"{what}: {', '.join(both)}")
