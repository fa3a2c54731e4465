"""Exception types shared across the package."""


class PolyvisError(Exception):
    """Base class for all polyvis errors."""


class InputError(PolyvisError):
    """A value fails validation (bad polynomial, bad flag value)."""


class LimitError(PolyvisError):
    """A request exceeds a documented resource guard."""


class LeadingZeroError(InputError):
    """Leading coefficient is zero."""


class NegativeCoefficientError(InputError):
    """A coefficient is negative."""


class GcdNotOneError(InputError):
    """Coefficients share a common factor greater than one."""


class PrimeBoundTooSmallError(InputError):
    """Euler-product prime bound below 2."""


class NotPrimeError(InputError):
    """A prime was required but a composite was supplied."""


class ModulusTooLargeError(LimitError):
    """Modulus exceeds the exhaustive-scan guard."""


class GridTooLargeError(LimitError):
    """Grid side exceeds the guard of the requested method."""


class TooManyTermsError(LimitError):
    """Inclusion-exclusion would need more than 2^30 subset terms."""
