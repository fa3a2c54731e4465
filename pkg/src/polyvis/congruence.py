"""Counting roots of P(d) = 0 (mod l) for the zero-constant-term polynomials.

Three routes, used to check each other:

* an exhaustive scan over d in [1, l] (the oracle),
* prime factorization + Hensel lifting + the CRT product rule,
* a per-prime distinct-root count (closed forms for degree <= 2 of the
  cofactor, a Frobenius gcd for higher degree) fast enough to run over
  every prime up to 10^6 for the Euler products.

Root representatives live in [1, l]; d = l is always a root because these
polynomials vanish at 0.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ModulusTooLargeError, NotPrimeError
from .poly import PolyNoConst
from .primes import is_prime

MAX_SCAN_MODULUS = 10**7

# below this, scanning beats polynomial arithmetic over F_p
_SMALL_PRIME_SCAN = 256


@dataclass(frozen=True)
class RootCount:
    """Number of d in [1, modulus] with P(d) = 0 (mod modulus)."""

    modulus: int
    count: int
    roots: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Factorization:
    """(prime, exponent) pairs, primes strictly increasing."""

    pairs: tuple[tuple[int, int], ...]

    def product(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out


def roots_mod_brute(poly: PolyNoConst, modulus: int) -> RootCount:
    """Exhaustive root scan over d in [1, modulus]; modulus <= 10^7."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if modulus > MAX_SCAN_MODULUS:
        raise ModulusTooLargeError(f"brute scan capped at {MAX_SCAN_MODULUS}, got {modulus}")
    d = np.arange(1, modulus + 1, dtype=np.int64)
    acc = np.zeros(modulus, dtype=np.int64)
    for c in poly.coeffs:
        acc = (acc * d + c % modulus) % modulus
    acc = acc * d % modulus
    roots = (np.flatnonzero(acc == 0) + 1).tolist()
    return RootCount(modulus, len(roots), tuple(int(r) for r in roots))


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division (moduli here stay <= 10^7)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    pairs = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                pairs.append((p, e))
        d += 6
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


# ---------------------------------------------------------------------------
# fast distinct-root count mod a prime
#
# P(x) = x * g(x) where g has the same coefficient vector read as a dense
# degree-(n-1) polynomial, so the roots of P mod p are {0} plus the roots
# of g mod p, deduplicated (0 is a root of g exactly when p | a_1).
# ---------------------------------------------------------------------------


def _poly_rem(u: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of u mod m over F_p; dense descending coefficients."""
    u = u[:]
    dm = len(m) - 1
    inv_lead = pow(m[0], -1, p)
    while len(u) - 1 >= dm:
        c = u[0]
        if c:
            f = c * inv_lead % p
            for i in range(dm + 1):
                u[i] = (u[i] - f * m[i]) % p
        u.pop(0)
    while u and u[0] == 0:
        u.pop(0)
    return u


def _poly_mulrem(u: list[int], v: list[int], m: list[int], p: int) -> list[int]:
    out = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                out[i + j] = (out[i + j] + ui * vj) % p
    return _poly_rem(out, m, p)


def _poly_gcd_deg(u: list[int], v: list[int], p: int) -> int:
    """Degree of gcd(u, v) over F_p (monic details irrelevant for us)."""
    while v:
        u, v = v, _poly_rem(u, v, p)
    return len(u) - 1


def _frobenius_root_count(g: list[int], p: int) -> int:
    """Distinct roots of g in F_p via deg gcd(x^p - x, g)."""
    # x^p mod g by square-and-multiply over the bits of p
    r = [1, 0]
    for bit in bin(p)[3:]:
        r = _poly_mulrem(r, r, g, p)
        if bit == "1":
            r = _poly_rem(r + [0], g, p)
    # subtract x
    w = r[:]
    if len(w) < 2:
        w = [0] * (2 - len(w)) + w
    w[-2] = (w[-2] - 1) % p
    while w and w[0] == 0:
        w.pop(0)
    if not w:
        return len(g) - 1  # g splits into distinct linear factors
    return _poly_gcd_deg(g, w, p)


def count_roots_mod_prime(poly: PolyNoConst, p: int) -> int:
    """Distinct roots of P mod p, counted without materializing them.

    Scans for small p; for large p counts roots of the degree-lowered
    cofactor g by closed form (deg <= 2) or a Frobenius gcd (deg >= 3),
    then adds the root at 0 unless g already vanishes there.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return _prime_root_count(poly, p)


def _prime_root_count(poly: PolyNoConst, p: int) -> int:
    # primality of p is the caller's problem (the Euler products iterate
    # over a sieve and must not pay a trial division per prime)
    if p <= _SMALL_PRIME_SCAN:
        count = 0
        for d in range(1, p + 1):
            if poly.eval_mod(d, p) == 0:
                count += 1
        return count
    g = [c % p for c in poly.coeffs]
    while g and g[0] == 0:
        g.pop(0)
    # gcd of the coefficients is 1, so g never vanishes identically
    deg = len(g) - 1
    if deg == 0:
        roots_g = 0
    elif deg == 1:
        roots_g = 1
    elif deg == 2:
        a, b, c = g
        disc = (b * b - 4 * a * c) % p
        if disc == 0:
            roots_g = 1
        else:
            roots_g = 2 if pow(disc, (p - 1) // 2, p) == 1 else 0
    else:
        roots_g = _frobenius_root_count(g, p)
    return roots_g + (1 if poly.coeffs[-1] % p != 0 else 0)


# ---------------------------------------------------------------------------
# Hensel lifting and the CRT product
# ---------------------------------------------------------------------------


def count_roots_prime_power(poly: PolyNoConst, p: int, k: int) -> RootCount:
    """Roots mod p^k by lifting the roots mod p.

    A root r with P'(r) != 0 (mod p) lifts uniquely per step (Newton); a
    root with vanishing derivative lifts to 0..p candidates, each kept
    only if exact evaluation confirms it. p^k <= 10^7 so root lists stay
    bounded even at the degenerate primes where counts grow.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    if p**k > MAX_SCAN_MODULUS:
        raise ModulusTooLargeError(f"p^k capped at {MAX_SCAN_MODULUS}, got {p}^{k}")
    base = roots_mod_brute(poly, p)
    if k == 1:
        return base
    roots = [r % p for r in base.roots]
    m = p
    for _ in range(k - 1):
        m_next = m * p
        lifted = []
        for r in roots:
            dp = poly.eval_derivative_mod(r, p)
            if dp != 0:
                u = (poly.eval(r) // m) % p
                t = -u * pow(dp, -1, p) % p
                lifted.append(r + t * m)
            else:
                for t in range(p):
                    cand = r + t * m
                    if poly.eval(cand) % m_next == 0:
                        lifted.append(cand)
        roots = lifted
        m = m_next
    reps = sorted(r if r >= 1 else m for r in roots)
    return RootCount(m, len(reps), tuple(reps))


def count_roots(poly: PolyNoConst, modulus: int) -> RootCount:
    """Root count mod any modulus via the factorization product rule.

    Prime factors to the first power use the fast count; higher powers go
    through Hensel lifting. Counts only (no root list).
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    count = 1
    for p, e in factorize(modulus).pairs:
        if e == 1:
            count *= _prime_root_count(poly, p)
        else:
            count *= count_roots_prime_power(poly, p, e).count
    return RootCount(modulus, count)
