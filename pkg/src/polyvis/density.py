"""Euler products over primes with rigorous truncation brackets.

Every factor 1 - f(p)/p^2 lies in (0, 1], so a truncated product is an
upper bound on the infinite one. The lower bound multiplies by
exp(-tail_log) where tail_log dominates the omitted -log(1 - f(p)/p^2)
terms: f(p) <= deg(P) at every prime (Lagrange, applied to the reduced
polynomial), and -log(1-x) <= 2x on the range that occurs here, so
tail_log = 2*deg(P)/B covers sum_{m>B} 2*deg(P)/m^2.
"""

from dataclasses import dataclass
from math import exp, log1p

from .congruence import _prime_root_count, factorize
from .errors import PrimeBoundTooSmallError
from .poly import PolyNoConst
from .primes import primes_up_to

DEFAULT_PRIME_BOUND = 10**6


@dataclass(frozen=True)
class DensityBracket:
    """Truncated Euler product with bounds on the infinite product."""

    value: float
    lower: float
    upper: float
    prime_bound: int

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def width(self) -> float:
        return self.upper - self.lower


def euler_product_density(poly: PolyNoConst, prime_bound: int = DEFAULT_PRIME_BOUND) -> DensityBracket:
    """prod_{p <= B} (1 - f(p)/p^2), bracketing the infinite product."""
    if prime_bound < 2:
        raise PrimeBoundTooSmallError(f"prime bound must be >= 2, got {prime_bound}")
    log_sum = 0.0
    for p in primes_up_to(prime_bound):
        f = _prime_root_count(poly, p)
        log_sum += log1p(-f / (p * p))
    value = exp(log_sum)
    tail_log = 2.0 * poly.degree / prime_bound
    return DensityBracket(value, value * exp(-tail_log), value, prime_bound)


def density_s1k(k: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> DensityBracket:
    """Closed form for the x^2 + kx family.

    prod_{p <= B} (1 - 2/p^2) times (1 + 1/(p^2 - 2)) for each prime
    p | k; algebraically the same product as euler_product_density((1,k))
    because the p | k factor collapses to 1 - 1/p^2. k = 1 leaves the
    base product untouched (f is 2 at every prime).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if prime_bound < 2:
        raise PrimeBoundTooSmallError(f"prime bound must be >= 2, got {prime_bound}")
    log_sum = 0.0
    for p in primes_up_to(prime_bound):
        log_sum += log1p(-2 / (p * p))
    for p, _ in factorize(k).pairs:
        log_sum += log1p(1 / (p * p - 2))
    value = exp(log_sum)
    tail_log = 4.0 / prime_bound  # the family has degree 2
    return DensityBracket(value, value * exp(-tail_log), value, prime_bound)


def zeta_reciprocal(s: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> DensityBracket:
    """1/zeta(s) via the truncated product of (1 - p^-s).

    Tail: sum_{p > B} -log(1 - p^-s) <= sum_{m > B} m^-s / (1 - 2^-s)
    <= B^(1-s) / ((s-1) (1 - 2^-s)); the 1/(1 - 2^-s) factor absorbs the
    higher-order terms of the logarithm.
    """
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    if prime_bound < 2:
        raise PrimeBoundTooSmallError(f"prime bound must be >= 2, got {prime_bound}")
    log_sum = 0.0
    for p in primes_up_to(prime_bound):
        log_sum += log1p(-float(p) ** -s)
    value = exp(log_sum)
    tail_log = prime_bound ** (1 - s) / ((s - 1) * (1 - 2.0**-s))
    return DensityBracket(value, value * exp(-tail_log), value, prime_bound)
