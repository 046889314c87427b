"""Exception hierarchy shared by every module of the package."""


class MonoreesError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MonoreesError, ValueError):
    """Input rejected before any computation started."""


class NonCoprime(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class NoSolution(ValidationError):
    pass


class RankMismatch(ValidationError):
    pass


class ZeroElement(ValidationError):
    pass


class RequiresUGreaterOne(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class NotHomogeneous(ValidationError):
    pass


class BelowAdjointThreshold(ValidationError):
    pass


class NotGroebner(MonoreesError):
    """A basis that was supposed to be a Groebner basis failed the S-pair test."""


class SigmaQZero(MonoreesError):
    """The sign of sigma_q decides the term order; zero would leave it undefined."""


class StabilityViolation(MonoreesError):
    """An ell-independent count came out different for two values of ell."""


class NonTermination(MonoreesError):
    """An iterative procedure hit its iteration cap."""


class DeadlineExceeded(MonoreesError):
    """A cooperative deadline passed while a long computation was running."""


class ConsistencyError(MonoreesError):
    """Two independent routes to the same quantity disagreed."""
