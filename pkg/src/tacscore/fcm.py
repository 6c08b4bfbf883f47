"""Fuzzy c-means clustering.

Conventions: data is an (n, d) array of points, cluster centers a (c, d)
array, and the partition matrix a (c, n) array of membership degrees whose
columns sum to 1. The fit alternates the center and membership updates from
a seeded random partition until memberships stop moving.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DegenerateClusterError

#: Columns of a valid partition sum to 1 within this.
COLUMN_SUM_TOL = 1e-12

#: Centers closer than this (Euclidean) after a fit are considered collapsed.
CENTER_DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class FcmConfig:
    """Clustering hyperparameters.

    c is the cluster count, m > 1 the fuzziness exponent, tol the
    convergence threshold on the max absolute membership change, max_iter
    the iteration cap and seed drives the random initial partition.
    """

    c: int
    m: float = 2.0
    tol: float = 1e-5
    max_iter: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.c < 2:
            raise ValueError(f"c must be >= 2, got {self.c}")
        if not self.m > 1.0:
            raise ValueError(f"m must be > 1, got {self.m}")
        if not self.tol > 0.0:
            raise ValueError(f"tol must be > 0, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class FcmResult:
    """Converged (or iteration-capped) clustering state."""

    partition: np.ndarray        # (c, n)
    centers: np.ndarray          # (c, d)
    objective_trace: list[float] = field(default_factory=list)
    iterations: int = 0


def dissimilarity(x, v) -> float:
    """Squared Euclidean distance between two equal-length vectors."""
    x = np.asarray(x, dtype=float)
    v = np.asarray(v, dtype=float)
    if x.shape != v.shape or x.ndim != 1 or x.size < 1:
        raise ValueError(f"dimension mismatch: {x.shape} vs {v.shape}")
    diff = x - v
    return float(diff @ diff)


def objective(partition, centers, data, m: float) -> float:
    """Weighted within-cluster scatter: sum_ij u_ij^m ||x_j - v_i||^2."""
    U = np.asarray(partition, dtype=float)
    V = np.asarray(centers, dtype=float)
    X = np.asarray(data, dtype=float)
    if not m > 1.0:
        raise ValueError(f"m must be > 1, got {m}")
    c, n = U.shape
    if X.shape[0] != n or V.shape != (c, X.shape[1]):
        raise ValueError(
            f"shape mismatch: partition {U.shape}, centers {V.shape}, data {X.shape}"
        )
    return kernels.fcm_objective(U, kernels.sq_dists(X, V), m)


def update_centers(partition, data, m: float) -> np.ndarray:
    """Membership^m weighted mean of the data, one row per cluster."""
    U = np.asarray(partition, dtype=float)
    X = np.asarray(data, dtype=float)
    if not m > 1.0:
        raise ValueError(f"m must be > 1, got {m}")
    if U.shape[1] != X.shape[0]:
        raise ValueError(f"shape mismatch: partition {U.shape}, data {X.shape}")
    row_mass = (U**m).sum(axis=1)
    if np.any(row_mass <= 0.0):
        empty = int(np.argmin(row_mass))
        raise DegenerateClusterError(f"cluster {empty} has zero membership mass")
    return kernels.weighted_centers(U, X, m)


def update_memberships(data, centers, m: float) -> np.ndarray:
    """Membership update from current centers; columns sum to 1.

    A point coinciding exactly with one center gets membership 1 there and
    0 elsewhere; coincidence with several centers splits the mass equally.
    """
    X = np.asarray(data, dtype=float)
    V = np.asarray(centers, dtype=float)
    if not m > 1.0:
        raise ValueError(f"m must be > 1, got {m}")
    if not np.all(np.isfinite(V)):
        raise ValueError("centers must be finite")
    if X.shape[1] != V.shape[1]:
        raise ValueError(f"shape mismatch: data {X.shape}, centers {V.shape}")
    return kernels.memberships_from_sq_dists(kernels.sq_dists(X, V), m)


def validate_partition(U: np.ndarray, atol: float = COLUMN_SUM_TOL) -> None:
    """Raise if U violates the partition-matrix contract."""
    U = np.asarray(U)
    if np.any(U < 0.0) or np.any(U > 1.0):
        raise ValueError("memberships must lie in [0, 1]")
    col_sums = U.sum(axis=0)
    if np.max(np.abs(col_sums - 1.0)) > atol:
        raise ValueError(f"column sums deviate from 1 by {np.max(np.abs(col_sums - 1.0)):.3e}")
    n = U.shape[1]
    row_sums = U.sum(axis=1)
    if np.any(row_sums <= 0.0) or np.any(row_sums >= n):
        raise DegenerateClusterError("a cluster row is empty or holds the entire set")


def _initial_partition(c: int, n: int, rng: np.random.Generator) -> np.ndarray:
    U = rng.random((c, n))
    return U / U.sum(axis=0, keepdims=True)


def fcm_fit(data, config: FcmConfig) -> FcmResult:
    """Alternate the two updates from a seeded random partition.

    Stops when the max absolute membership change drops below config.tol
    or after config.max_iter sweeps. The objective trace records the value
    after each sweep's pair of updates and is non-increasing.
    """
    X = np.asarray(data, dtype=float)
    if X.ndim != 2:
        raise ValueError(f"data must be 2-D (n, d), got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError("data must be finite")
    n = X.shape[0]
    if n <= config.c:
        raise ValueError(f"need more points than clusters: n={n}, c={config.c}")

    rng = np.random.default_rng(config.seed)
    U = _initial_partition(config.c, n, rng)

    trace: list[float] = []
    iterations = 0
    for _ in range(config.max_iter):
        V = update_centers(U, X, config.m)
        U_next = update_memberships(X, V, config.m)
        iterations += 1
        trace.append(kernels.fcm_objective(U_next, kernels.sq_dists(X, V), config.m))
        delta = float(np.max(np.abs(U_next - U)))
        U = U_next
        if delta < config.tol:
            break

    validate_partition(U)
    centers = update_centers(U, X, config.m)
    d2 = kernels.sq_dists(centers, centers)
    np.fill_diagonal(d2, np.inf)
    if np.min(d2) <= CENTER_DEGENERACY_TOL**2:
        raise DegenerateClusterError("two cluster centers collapsed onto each other")

    return FcmResult(partition=U, centers=centers,
                     objective_trace=trace, iterations=iterations)
