"""Exception types shared across the toolkit."""


class Gl3LabError(Exception):
    """Base class for every error raised by this package."""


class NonInvertible(Gl3LabError):
    """The residue has no multiplicative inverse for the given modulus."""


class InvalidInput(Gl3LabError):
    """An argument violates a documented precondition."""


class OutOfRange(Gl3LabError):
    """A parameter falls outside its admissible window."""


class NoConvergence(Gl3LabError):
    """A quadrature error estimate stalled above the requested tolerance."""


class PreconditionViolated(Gl3LabError):
    """A derivative floor or sign condition failed on the sample grid."""


class NoStationaryPoint(Gl3LabError):
    """The phase derivative does not change sign on the domain."""


class MultipleStationaryPoints(Gl3LabError):
    """The phase derivative changes sign more than once on the grid."""


class HessianConditionFailed(Gl3LabError):
    """The two-dimensional second-derivative conditions fail on the grid."""


class NearPole(Gl3LabError):
    """Evaluation point is within the safety threshold of a gamma pole."""


class TailTooLarge(Gl3LabError):
    """The estimated contour tail exceeds the requested tolerance."""


class TruncationTooSmall(Gl3LabError):
    """The dual-sum truncation leaves an estimated tail above tolerance."""


class NoCrossing(Gl3LabError):
    """All exponent terms move the same way; no balancing point exists."""


class UsageError(Gl3LabError):
    """Malformed command line or configuration input."""
