"""Kernel backend selection.

The compiled Cython core is preferred when it imports cleanly; the numpy
implementation in ``_pylib`` is the fallback and the reference. Set
``TACSCORE_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
the backend-equivalence tests).
"""

import os

from . import _pylib

_impl = _pylib
BACKEND = "python"

if os.environ.get("TACSCORE_PURE_PYTHON", "") != "1":
    try:
        from . import _core as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "compiled"

sq_dists = _impl.sq_dists
memberships_from_sq_dists = _impl.memberships_from_sq_dists
weighted_centers = _impl.weighted_centers
fcm_objective = _impl.fcm_objective
mlp_forward = _impl.mlp_forward
mlp_residual_jacobian = _impl.mlp_residual_jacobian

__all__ = [
    "BACKEND",
    "sq_dists",
    "memberships_from_sq_dists",
    "weighted_centers",
    "fcm_objective",
    "mlp_forward",
    "mlp_residual_jacobian",
]
