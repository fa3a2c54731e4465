"""Polynomials a_n x^n + ... + a_1 x with non-negative integer coefficients.

These are the curve families the whole package is built around: zero
constant term (every curve passes through the origin), positive leading
coefficient, and coprime coefficients. Under those constraints evaluation
at positive integers is strictly increasing, which the visibility sieve
relies on.
"""

from dataclasses import dataclass
from math import gcd

from .errors import GcdNotOneError, InputError, LeadingZeroError, NegativeCoefficientError


@dataclass(frozen=True)
class PolyNoConst:
    """Coefficient vector (a_n, ..., a_1), highest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise InputError("coefficient list is empty")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(c < 0 for c in self.coeffs):
            raise NegativeCoefficientError(f"negative coefficient in {self.coeffs}")
        if self.coeffs[0] == 0:
            raise LeadingZeroError("leading coefficient must be >= 1")
        if gcd(*self.coeffs) != 1:
            raise GcdNotOneError(f"gcd of {self.coeffs} is {gcd(*self.coeffs)}, not 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def eval(self, a: int) -> int:
        """Exact value at a >= 0. Python ints, so no overflow ever."""
        acc = 0
        for c in self.coeffs:
            acc = acc * a + c
        return acc * a

    def eval_mod(self, a: int, m: int) -> int:
        """Value at a reduced mod m >= 1."""
        a %= m
        acc = 0
        for c in self.coeffs:
            acc = (acc * a + c) % m
        return acc * a % m

    def derivative_coeffs(self) -> tuple[int, ...]:
        """Descending coefficients of the derivative: (n*a_n, ..., 1*a_1)."""
        n = self.degree
        return tuple((n - i) * c for i, c in enumerate(self.coeffs))

    def eval_derivative_mod(self, r: int, m: int) -> int:
        """Derivative value at r, reduced mod m >= 1."""
        r %= m
        acc = 0
        for c in self.derivative_coeffs():
            acc = (acc * r + c) % m
        return acc

    def evals_up_to(self, n: int) -> list[int]:
        """[eval(1), ..., eval(n)] as exact ints; shared by the grid scans."""
        return [self.eval(a) for a in range(1, n + 1)]

    def __str__(self) -> str:
        return format_poly(self)


def make_poly(coeffs) -> PolyNoConst:
    """Validate a coefficient sequence (highest degree first)."""
    return PolyNoConst(tuple(coeffs))


def parse_poly(text: str) -> PolyNoConst:
    """Parse the canonical comma-separated encoding, e.g. "2,0,15"."""
    try:
        coeffs = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse polynomial {text!r}: {exc}") from None
    return make_poly(coeffs)


def format_poly(poly: PolyNoConst) -> str:
    """Canonical comma-separated encoding, inverse of parse_poly."""
    return ",".join(str(c) for c in poly.coeffs)


def pretty_poly(poly: PolyNoConst) -> str:
    """Human form like "2x^3 + 15x"; zero terms omitted."""
    parts = []
    n = poly.degree
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        power = n - i
        coef = "" if c == 1 else str(c)
        parts.append(f"{coef}x" if power == 1 else f"{coef}x^{power}")
    return " + ".join(parts)
