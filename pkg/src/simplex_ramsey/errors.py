"""Exception types shared across the package."""


class SimplexRamseyError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SimplexRamseyError, ValueError):
    """A scalar or matrix literal could not be read as an exact rational."""


class MalformedMatrix(SimplexRamseyError, ValueError):
    """Squared-distance data is not symmetric, has a nonzero diagonal, etc."""


class DuplicatePoints(MalformedMatrix):
    """Two vertices coincide (zero off-diagonal squared distance)."""


class DegenerateSimplex(SimplexRamseyError, ValueError):
    """The vertices are affinely dependent or not Euclidean-embeddable."""


class SingularSystem(SimplexRamseyError, ArithmeticError):
    pass


class ToleranceExceeded(SimplexRamseyError, ArithmeticError):
    """A floating-point realization drifted past the requested tolerance."""


class NotADiameterPair(SimplexRamseyError, ValueError):
    pass


class TooManyVertices(SimplexRamseyError, ValueError):
    pass


class ClosedFormMismatch(SimplexRamseyError, AssertionError):
    """The generic circumcenter solver disagrees with the family closed form."""


class InconsistentCertificate(SimplexRamseyError, AssertionError):
    """A verified certificate contradicts the circumradius obstruction."""
