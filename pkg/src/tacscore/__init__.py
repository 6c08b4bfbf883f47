"""Fuzzy-neural decision scoring toolkit.

Clusters unlabeled multi-factor scenario data into bad/acceptable/good
decision regions with fuzzy c-means, trains a small feedforward network on
the cluster memberships with a Levenberg-Marquardt optimizer, and serves
scalar decision scores through a CLI and an HTTP API.
"""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
