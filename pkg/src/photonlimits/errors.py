"""Exception types shared across the package."""


class PhotonLimitsError(Exception):
    """Base class for all package-specific errors."""


class InvalidGridError(PhotonLimitsError, ValueError):
    """Grid parameters violate the uniform power-of-two contract."""


class NormalizationError(PhotonLimitsError, ValueError):
    """Input signal or spectrum is not normalized to unit squared-norm."""


class DomainError(PhotonLimitsError, ValueError):
    """Argument lies outside the mathematical domain of an operation."""


class CoverageError(PhotonLimitsError, ValueError):
    """Grid window is too small to hold the requested pulse."""


class DegenerateTargetError(PhotonLimitsError, ValueError):
    """Target construction collapses (e.g. no positive-frequency mass)."""


class DegenerateMeasurementError(PhotonLimitsError, ValueError):
    """Smearing construction is undefined (no negative-time tail)."""


class InfeasibleSeedError(PhotonLimitsError, ValueError):
    """Seed pulse has negative-frequency weight >= 1/2."""


class CausalityError(PhotonLimitsError, ValueError):
    """Signal violates a required causality precondition."""


class ConvergenceError(PhotonLimitsError, ArithmeticError):
    """Series or quadrature failed to converge at the requested tolerance."""


class TruncationError(PhotonLimitsError, ValueError):
    """Fock-space truncation is inadequate for the requested squeezing."""


class ConsistencyError(PhotonLimitsError, AssertionError):
    """Two independent computations of the same quantity disagree."""
