"""Feedforward network with analytic residual Jacobian.

Fixed topology family: 4 inputs, tanh hidden layers, 3 identity outputs.
Residuals are target - output, flattened sample-major then output-minor,
and the Jacobian differentiates that residual vector with respect to the
flat parameter vector [W1, b1, W2, b2, ...] (each block row-major). Both
orderings are contracts relied on by the optimizer and the model file.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels


@dataclass(frozen=True)
class Network:
    """Layered weights/biases; weights[l] has shape (fan_out, fan_in)."""

    layer_sizes: tuple[int, ...]
    weights: tuple[np.ndarray, ...]
    biases: tuple[np.ndarray, ...]

    def __post_init__(self):
        sizes = self.layer_sizes
        if len(sizes) < 2:
            raise ValueError("need at least an input and an output layer")
        if any(s < 1 for s in sizes):
            raise ValueError(f"layer sizes must be positive: {sizes}")
        if len(self.weights) != len(sizes) - 1 or len(self.biases) != len(sizes) - 1:
            raise ValueError("one weight matrix and bias vector per layer transition")
        for l, (W, b) in enumerate(zip(self.weights, self.biases)):
            if W.shape != (sizes[l + 1], sizes[l]) or b.shape != (sizes[l + 1],):
                raise ValueError(
                    f"layer {l}: weight shape {W.shape} / bias shape {b.shape} "
                    f"inconsistent with sizes {sizes[l]}->{sizes[l + 1]}"
                )
            if not (np.all(np.isfinite(W)) and np.all(np.isfinite(b))):
                raise ValueError(f"layer {l}: non-finite parameters")

    @property
    def param_count(self) -> int:
        return sum(W.size + b.size for W, b in zip(self.weights, self.biases))


def init_network(layer_sizes=(4, 10, 3), seed: int = 0) -> Network:
    """Seeded uniform init in [-0.5, 0.5] for all weights and biases."""
    rng = np.random.default_rng(seed)
    weights = []
    biases = []
    for fan_in, fan_out in zip(layer_sizes, layer_sizes[1:]):
        weights.append(rng.random((fan_out, fan_in)) - 0.5)
        biases.append(rng.random(fan_out) - 0.5)
    return Network(tuple(layer_sizes), tuple(weights), tuple(biases))


def flatten_params(net: Network) -> np.ndarray:
    """Flat parameter vector in the contractual [W, b] per-layer order."""
    parts = []
    for W, b in zip(net.weights, net.biases):
        parts.append(W.ravel())
        parts.append(b)
    return np.concatenate(parts)


def unflatten_params(net: Network, params: np.ndarray) -> Network:
    """Rebuild a network with the same shape from a flat vector."""
    params = np.asarray(params, dtype=float)
    if params.shape != (net.param_count,):
        raise ValueError(f"expected {net.param_count} parameters, got {params.shape}")
    weights = []
    biases = []
    pos = 0
    for W, b in zip(net.weights, net.biases):
        weights.append(params[pos:pos + W.size].reshape(W.shape).copy())
        pos += W.size
        biases.append(params[pos:pos + b.size].copy())
        pos += b.size
    return Network(net.layer_sizes, tuple(weights), tuple(biases))


def _forward_all(net: Network, X: np.ndarray) -> list[np.ndarray]:
    """Activations per layer, input included; tanh hidden, identity output."""
    acts = [X]
    a = X
    last = len(net.weights) - 1
    for l, (W, b) in enumerate(zip(net.weights, net.biases)):
        z = a @ W.T + b
        a = z if l == last else np.tanh(z)
        acts.append(a)
    return acts


def forward_batch(net: Network, X) -> np.ndarray:
    """Outputs for a (n, in) batch, shape (n, out)."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != net.layer_sizes[0]:
        raise ValueError(f"expected (n, {net.layer_sizes[0]}) inputs, got {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError("inputs must be finite")
    if len(net.weights) == 2:
        _, Y = kernels.mlp_forward(
            np.ascontiguousarray(X),
            net.weights[0], net.biases[0], net.weights[1], net.biases[1],
        )
        return Y
    return _forward_all(net, X)[-1]


def forward(net: Network, x) -> np.ndarray:
    """Outputs for a single input vector."""
    x = np.asarray(x, dtype=float)
    return forward_batch(net, x[None, :])[0]


def _split_batch(batch) -> tuple[np.ndarray, np.ndarray]:
    """Accepts an (X, T) pair of 2-D arrays or a sequence of (input, target) pairs."""
    if (
        isinstance(batch, tuple)
        and len(batch) == 2
        and isinstance(batch[0], np.ndarray)
        and batch[0].ndim == 2
    ):
        X, T = batch
    else:
        if len(batch) == 0:
            raise ValueError("batch must be nonempty")
        X = [pair[0] for pair in batch]
        T = [pair[1] for pair in batch]
    X = np.ascontiguousarray(X, dtype=float)
    T = np.ascontiguousarray(T, dtype=float)
    if X.ndim != 2 or T.ndim != 2 or X.shape[0] != T.shape[0] or X.shape[0] == 0:
        raise ValueError(f"inconsistent batch shapes: inputs {X.shape}, targets {T.shape}")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(T))):
        raise ValueError("batch must be finite")
    return X, T


def residuals(net: Network, batch) -> np.ndarray:
    """target - output, flattened so row s*out+o is sample s, output o."""
    X, T = _split_batch(batch)
    return (T - forward_batch(net, X)).reshape(-1)


def residual_jacobian(net: Network, batch) -> tuple[np.ndarray, np.ndarray]:
    """Residual vector and its Jacobian with respect to the flat parameters.

    One combined evaluation; the optimizer calls this once per epoch.
    """
    X, T = _split_batch(batch)
    if len(net.weights) == 2:
        return kernels.mlp_residual_jacobian(
            X, T, net.weights[0], net.biases[0], net.weights[1], net.biases[1]
        )
    return _residual_jacobian_general(net, X, T)


def jacobian(net: Network, batch) -> np.ndarray:
    """J[r, p] = d residual_r / d param_p; rows ordered like residuals."""
    return residual_jacobian(net, batch)[1]


def _residual_jacobian_general(net: Network, X, T):
    # reverse-mode, vectorized over samples, one backward pass per output
    acts = _forward_all(net, X)
    Y = acts[-1]
    n, out = Y.shape
    e = (T - Y).reshape(-1)
    n_layers = len(net.weights)
    J = np.empty((n * out, net.param_count))
    for o in range(out):
        # gradient of y[:, o] w.r.t. each parameter, per sample
        delta = np.zeros((n, out))
        delta[:, o] = 1.0
        cols: list[np.ndarray] = []
        for l in range(n_layers - 1, -1, -1):
            a_prev = acts[l]
            gW = np.einsum("sj,si->sji", delta, a_prev).reshape(n, -1)
            gb = delta
            cols.append(np.concatenate([gW, gb], axis=1))
            if l > 0:
                delta = (delta @ net.weights[l]) * (1.0 - acts[l] * acts[l])
        per_sample = np.concatenate(cols[::-1], axis=1)
        J[o::out, :] = -per_sample
    return e, J


def sse(net: Network, batch) -> float:
    """Sum of squared residuals."""
    e = residuals(net, batch)
    return float(e @ e)


def mse(net: Network, batch) -> float:
    """sse / residual count (3 per sample)."""
    e = residuals(net, batch)
    return float(e @ e) / e.size


def rmse(net: Network, batch) -> float:
    return float(np.sqrt(mse(net, batch)))
