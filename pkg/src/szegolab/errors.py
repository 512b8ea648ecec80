"""Exception hierarchy.

Configuration problems (bad degrees, precisions, schedule parameters) are
distinct from computational failures (iteration did not converge, curve
tracing lost the branch) so that callers and the CLI can map them to
different exit codes.
"""

from __future__ import annotations


class SzegolabError(Exception):
    """Base class for all package errors."""


class ConfigurationError(SzegolabError, ValueError):
    """Invalid static configuration (degree, precision, schedule, ...)."""


class PrecisionError(ConfigurationError):
    """Requested working precision is below the supported minimum."""


class InvalidParameter(ConfigurationError):
    """Parameter outside the documented domain of an operation."""


class DegenerateParameter(InvalidParameter):
    """alpha lies in (or rounds into) the degenerate set {-1, ..., -n}."""


class InvalidSchedule(ConfigurationError):
    """Parameter schedule outside its admissible range."""


class InvalidTestPoint(ConfigurationError):
    """A point supplied for an identity check is in the wrong region."""


class ComputationError(SzegolabError):
    """Base class for runtime numerical failures."""


class NonConvergence(ComputationError):
    """Iteration hit its sweep cap before reaching tolerance.

    Carries the best iterate and its worst residual so callers can inspect
    or restart.
    """

    def __init__(self, message, best=None, max_residual=None):
        super().__init__(message)
        self.best = best
        self.max_residual = max_residual


class TraceError(ComputationError):
    """Level-curve continuation failed persistently at some sample."""


class SingularEvaluation(ComputationError):
    """Evaluation point coincides with a support point of a measure."""
