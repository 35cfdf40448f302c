"""Exception types shared across the package."""


class MockradError(Exception):
    """Base class for all package-specific errors."""


class ZeroLeadingTerm(MockradError):
    """Series inversion requested for a series with no invertible leading term."""


class NonStabilizing(MockradError):
    """Infinite product factor violates the minimal-order growth requirement."""


class OutOfWindow(MockradError):
    """Coefficient requested at or beyond the truncation window."""


class IrrationalPhase(MockradError):
    """A half-period shift would introduce non-rational coefficient phases."""


class NonvanishingRemainder(MockradError):
    """An exact polynomial division left a remainder; the input is inconsistent."""


class NonPositiveOrder(MockradError):
    """A geometric expansion variable has no positive q-order after rewriting."""


class NotCoprime(MockradError):
    """Multiplier arguments h, k must be coprime."""


class BranchUnavailable(MockradError):
    """A multiplier table branch references an undefined sub-multiplier."""


class QuadratureFailure(MockradError):
    """Adaptive quadrature could not reach the tolerance within the subdivision cap."""


class PrecisionInsufficient(MockradError):
    """A real-valued target acquired an imaginary part beyond the roundoff budget."""


class DomainError(MockradError):
    """Argument outside the analytic domain of the requested function."""


class NegativeArgument(DomainError):
    """Bessel evaluation requested at a negative real argument."""


class TailBoundUnreachable(MockradError):
    """A truncated series cannot meet the target precision at the given point."""
