"""Pure-numpy kernel implementations.

This module is the reference backend: the compiled core in ``_core.pyx``
implements the same six functions with identical signatures and semantics.
Shapes follow the package conventions: data X is (n, d), cluster centers V
are (c, d), the partition matrix U is (c, n), network batches are row-major
(n, features).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def sq_dists(X: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Squared Euclidean distances, D2[i, j] = ||X[j] - V[i]||^2, shape (c, n)."""
    diff = V[:, None, :] - X[None, :, :]
    return np.einsum("cnd,cnd->cn", diff, diff)


def memberships_from_sq_dists(D2: np.ndarray, m: float) -> np.ndarray:
    """Membership update from squared distances.

    Columns with one or more exact-zero distances get full membership split
    equally among the coincident centers (the analytic limit of the update);
    all other columns use the ratio form, which cannot overflow for nonzero
    distances.
    """
    c, n = D2.shape
    power = 1.0 / (m - 1.0)
    U = np.zeros((c, n))

    zero = D2 == 0.0
    coincident = zero.any(axis=0)
    if coincident.any():
        cols = np.where(coincident)[0]
        counts = zero[:, cols].sum(axis=0)
        U[:, cols] = zero[:, cols] / counts

    regular = ~coincident
    if regular.any():
        D = D2[:, regular]
        # u_ij = 1 / sum_k (d_ij / d_kj)^power
        ratios = (D[:, None, :] / D[None, :, :]) ** power
        U[:, regular] = 1.0 / ratios.sum(axis=1)
        # renormalize columns to absorb rounding
        U[:, regular] /= U[:, regular].sum(axis=0, keepdims=True)
    return U


def weighted_centers(U: np.ndarray, X: np.ndarray, m: float) -> np.ndarray:
    """Membership^m weighted means, shape (c, d). Caller guards empty rows."""
    Um = U**m
    return (Um @ X) / Um.sum(axis=1, keepdims=True)


def fcm_objective(U: np.ndarray, D2: np.ndarray, m: float) -> float:
    """Clustering objective: sum of membership^m weighted squared distances."""
    return float(np.sum(U**m * D2))


def mlp_forward(X: np.ndarray, W1: np.ndarray, b1: np.ndarray,
                W2: np.ndarray, b2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """One-hidden-layer forward pass: tanh hidden, identity output.

    Returns (A1, Y): hidden activations (n, h) and outputs (n, o).
    """
    A1 = np.tanh(X @ W1.T + b1)
    Y = A1 @ W2.T + b2
    return A1, Y


def mlp_residual_jacobian(X: np.ndarray, T: np.ndarray,
                          W1: np.ndarray, b1: np.ndarray,
                          W2: np.ndarray, b2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Residuals e = T - Y flattened sample-major, and J = de/dparams.

    Row r = s * n_out + o corresponds to sample s, output o. Columns follow
    the parameter flattening order [W1, b1, W2, b2], each row-major.
    """
    n, d = X.shape
    h = W1.shape[0]
    o = W2.shape[0]
    A1, Y = mlp_forward(X, W1, b1, W2, b2)
    e = (T - Y).reshape(n * o)

    # d(a1)/d(z1) for tanh
    S = 1.0 - A1 * A1  # (n, h)
    # dY[s,k]/dW1[j,i] = W2[k,j] * S[s,j] * X[s,i]; residual derivative is negated
    dW1 = -np.einsum("kj,sj,si->skji", W2, S, X).reshape(n * o, h * d)
    db1 = -np.einsum("kj,sj->skj", W2, S).reshape(n * o, h)
    # dY[s,k]/dW2[k',j] = A1[s,j] only when k' == k
    dW2 = np.zeros((n, o, o, h))
    idx = np.arange(o)
    dW2[:, idx, idx, :] = -A1[:, None, :]
    dW2 = dW2.reshape(n * o, o * h)
    db2 = np.zeros((n, o, o))
    db2[:, idx, idx] = -1.0
    db2 = db2.reshape(n * o, o)

    J = np.concatenate([dW1, db1, dW2, db2], axis=1)
    return e, J
