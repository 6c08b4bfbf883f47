"""Levenberg-Marquardt training for the residual network.

The step solves the damped normal equations (J^T J + mu I) d = -J^T e and
adds d to the parameters; with residuals e = target - output this descends
the sum-of-squares loss (mu = 0 reproduces Gauss-Newton exactly on linear
problems, large mu shrinks toward a short gradient step). mu shrinks after
every accepted step and grows on rejected ones, so the recorded loss trace
never increases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import nnet
from .errors import SingularMatrixError, StalledOptimizerError

# keeps repeated mu decreases from underflowing to an un-inflatable 0.0
_MU_FLOOR = float(np.finfo(float).tiny)


@dataclass(frozen=True)
class LmConfig:
    """Damping schedule and stopping rules.

    Training stops at max_epochs accepted steps, when sse falls to
    loss_tol, or when mu exceeds mu_max. An epoch is one accepted update;
    rejected proposals inflate mu and retry within the same epoch.
    """

    mu0: float = 1e-3
    mu_inc: float = 10.0
    mu_dec: float = 10.0
    mu_max: float = 1e10
    max_epochs: int = 1500
    loss_tol: float = 0.0

    def __post_init__(self):
        if not self.mu0 > 0.0:
            raise ValueError(f"mu0 must be > 0, got {self.mu0}")
        if not self.mu_inc > 1.0:
            raise ValueError(f"mu_inc must be > 1, got {self.mu_inc}")
        if not self.mu_dec > 1.0:
            raise ValueError(f"mu_dec must be > 1, got {self.mu_dec}")
        if not self.mu_max > self.mu0:
            raise ValueError(f"mu_max must exceed mu0, got {self.mu_max}")
        if self.max_epochs < 1:
            raise ValueError(f"max_epochs must be >= 1, got {self.max_epochs}")


@dataclass(frozen=True)
class TrainReport:
    """Accepted-loss trace and schedule bookkeeping for one training run.

    loss_trace[0] is the initial sse; each accepted epoch appends its new
    sse. mu_trace is aligned: mu_trace[0] = mu0, then the damping value
    each accepted step was computed with.
    """

    loss_trace: list[float] = field(default_factory=list)
    mu_trace: list[float] = field(default_factory=list)
    accepted_steps: int = 0
    rejected_steps: int = 0
    final_sse: float = float("nan")
    final_mse: float = float("nan")
    final_rmse: float = float("nan")
    epochs_run: int = 0
    stop_reason: str = ""


def lm_step(J: np.ndarray, e: np.ndarray, mu: float) -> np.ndarray:
    """Parameter increment from one damped Gauss-Newton solve.

    Solves (J^T J + mu I) d = -J^T e; adding the returned d to the current
    parameters performs the update (exact least-squares jump at mu = 0,
    approximately -(1/mu) J^T e when mu dominates).
    """
    J = np.asarray(J, dtype=float)
    e = np.asarray(e, dtype=float)
    if mu < 0.0:
        raise ValueError(f"mu must be >= 0, got {mu}")
    if J.ndim != 2 or e.shape != (J.shape[0],):
        raise ValueError(f"shape mismatch: J {J.shape}, e {e.shape}")
    A = J.T @ J
    A[np.diag_indices_from(A)] += mu
    try:
        return np.linalg.solve(A, -(J.T @ e))
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"damped normal matrix singular at mu={mu}") from exc


def train(net: nnet.Network, batch, config: LmConfig = LmConfig()) -> tuple[nnet.Network, TrainReport]:
    """Full-batch LM training; returns the trained network and its report."""
    x = nnet.flatten_params(net)
    current = net
    e, J = nnet.residual_jacobian(current, batch)
    sse = float(e @ e)
    n_res = e.size

    mu = config.mu0
    loss_trace = [sse]
    mu_trace = [mu]
    accepted = 0
    rejected = 0
    stop_reason = ""

    while True:
        if sse <= config.loss_tol:
            stop_reason = "loss_tol"
            break
        if accepted >= config.max_epochs:
            stop_reason = "max_epochs"
            break
        if mu > config.mu_max:
            stop_reason = "mu_max"
            break

        # propose steps at growing mu until one reduces the loss
        stepped = False
        while mu <= config.mu_max:
            try:
                dx = lm_step(J, e, mu)
            except SingularMatrixError:
                dx = None
            if dx is not None and np.all(np.isfinite(dx)):
                candidate_x = x + dx
                candidate = nnet.unflatten_params(current, candidate_x)
                new_sse = nnet.sse(candidate, batch)
                if np.isfinite(new_sse) and new_sse < sse:
                    x, current, sse = candidate_x, candidate, new_sse
                    e, J = nnet.residual_jacobian(current, batch)
                    accepted += 1
                    loss_trace.append(sse)
                    mu_trace.append(mu)
                    mu = max(mu / config.mu_dec, _MU_FLOOR)
                    stepped = True
                    break
            rejected += 1
            mu = mu * config.mu_inc

        if not stepped:
            stop_reason = "mu_max"
            break

    report = TrainReport(
        loss_trace=loss_trace,
        mu_trace=mu_trace,
        accepted_steps=accepted,
        rejected_steps=rejected,
        final_sse=sse,
        final_mse=sse / n_res,
        final_rmse=float(np.sqrt(sse / n_res)),
        epochs_run=accepted,
        stop_reason=stop_reason,
    )
    if stop_reason == "mu_max" and accepted == 0:
        raise StalledOptimizerError(
            f"damping exceeded mu_max={config.mu_max} before any step was accepted",
            report=report,
        )
    return current, report
