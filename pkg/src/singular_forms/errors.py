"""Exception types shared across the library."""


class SingularFormsError(Exception):
    """Base class for all library errors."""


class SingularMatrix(SingularFormsError):
    """Raised when inverting a constant matrix of deficient rank."""


class NotDivisible(SingularFormsError):
    """Raised when a form has no exact homogeneous quotient by the divisor."""


class NotRankOne(SingularFormsError):
    """Raised when a rank-1 factorization is requested for a matrix of other rank."""


class WrongRank(SingularFormsError):
    """Raised when a corank-1 kernel computation is requested for a matrix of other rank."""


class DegreeNotOne(SingularFormsError):
    """Raised when an operation defined for matrices of linear forms gets another degree."""


class SpanTooSmall(SingularFormsError):
    """Raised when a spanning-set construction needs forms of span dimension at least 2."""


class WrongShape(SingularFormsError):
    """Raised when the classifier receives anything but a 3x3 matrix of linear forms."""


class InternalContradiction(SingularFormsError):
    """An internal uniqueness or invertibility assertion failed; indicates a bug."""


class MalformedInput(SingularFormsError):
    """Raised on unparsable CLI input; carries position diagnostics when available."""
