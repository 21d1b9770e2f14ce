"""Exception hierarchy shared by every module of the package."""


class HypercomplexError(Exception):
    """Base class for domain errors raised by this package."""


class NonFiniteError(HypercomplexError, ValueError):
    """A NaN or infinite component was supplied."""


class SingularError(HypercomplexError):
    """The element (or matrix) has zero determinant and no inverse."""


class ZeroElementError(SingularError):
    """The additive identity (0, 0) was asked for an inverse."""


class NotInRealizationError(HypercomplexError):
    """A matrix does not have the shape [[a, t b], [conj b, conj a]]."""


class NotClosedError(HypercomplexError):
    """The matrix adjoint leaves the realization set for this scale."""


class BadScaleError(HypercomplexError):
    """The operation is only established for a different range of scales."""


class ZeroBError(HypercomplexError):
    """The second component is zero where the construction divides by it."""


class SimilarityNotEstablishedError(HypercomplexError):
    """Closed-form moments requested where realization and spectral form
    are not known to be similar (t >= 0 with b != 0)."""


class ZeroInputError(HypercomplexError):
    """Polar decomposition of zero: the unit-circle factor is undefined."""


class ClassificationMismatchError(HypercomplexError):
    """Closed-form operator flags disagree with the brute-force matrix check."""


class ParseError(HypercomplexError, ValueError):
    """Malformed literal, word or expression text."""
