"""Exception hierarchy shared by all framedsurf modules."""


class FramedSurfError(ValueError):
    """Base class for all domain errors raised by this package."""


class CoherenceViolation(FramedSurfError):
    """Boundary winding numbers do not sum to the Euler characteristic."""


class TypeViolation(FramedSurfError):
    """A winding number has the wrong arithmetic type (integer vs half-integer)."""


class KindMismatch(FramedSurfError):
    """An operation received a relative class where an absolute one is required
    (or vice versa)."""


class BadPartition(FramedSurfError):
    """Not a valid partition of 2g - 2 by positive integers."""


class UnknownCurve(FramedSurfError):
    """A named curve is not tracked in the engine state."""


class UnknownBoundary(FramedSurfError):
    """A boundary label does not exist on the surface."""


class WrongBoundaryCount(FramedSurfError):
    """Operation requires a specific number of boundary components."""


class OutOfClassifiedRange(FramedSurfError):
    """The requested (g, n) or genus is outside the range the classification
    results cover; we refuse rather than guess."""


class Unstabilized(FramedSurfError):
    """An orbit search did not stabilize within the allotted depth."""


class SignatureMismatch(FramedSurfError):
    """Boundary signatures of pieces are inconsistent with each other."""


class RibbonIncomplete(FramedSurfError):
    """Cyclic intersection positions are missing or inconsistent, so the
    regular neighborhood cannot be traced."""


class Unsupported(FramedSurfError):
    """The operation is not defined for this input (e.g. hyperelliptic base)."""


class DegenerateIdentification(FramedSurfError):
    """A cone point of a glued cylinder has total angle 2*pi (a marked regular
    point).  Raised only when the caller asks for strict zero data."""


class SameZero(FramedSurfError):
    """Saddle-connection enumeration requires two distinct zeros."""


class NonTransverse(FramedSurfError):
    """A flat path does not cross the cylinder transversally."""


class CornerAtZero(FramedSurfError):
    """A corner of a flat path lands on a zero of the differential."""
