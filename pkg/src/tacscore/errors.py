"""Exception types shared across the package.

Argument validation uses plain ValueError; the classes here mark domain
conditions a caller may want to catch specifically.
"""


class TacscoreError(Exception):
    """Base class for domain errors raised by this package."""


class DegenerateClusterError(TacscoreError):
    """A cluster lost all membership mass (empty row in the partition)."""


class AmbiguousOrderingError(TacscoreError):
    """Two cluster centers score identically; bad/acceptable/good ranks undefined."""


class SingularMatrixError(TacscoreError):
    """The damped normal matrix could not be factorized (mu = 0 on a rank-deficient system)."""


class StalledOptimizerError(TacscoreError):
    """Damping exceeded mu_max before any step was accepted.

    Carries the partial training report built up to the stall.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ModelNotReadyError(TacscoreError):
    """A score was requested before a trained model was available."""


class ModelFormatError(TacscoreError):
    """A model file failed to parse; message includes line context when known."""


class UnsupportedVersionError(ModelFormatError):
    """Model file format_version is not one this build can read."""
