"""Prime sieving and primality helpers."""

import numpy as np


def prime_mask(n: int) -> np.ndarray:
    """Boolean array of length n+1 with True at prime indices."""
    if n < 2:
        return np.zeros(max(n + 1, 0), dtype=bool)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending, as Python ints."""
    return [int(p) for p in np.flatnonzero(prime_mask(n))]


def is_prime(n: int) -> bool:
    """Trial division; fine for the modulus sizes used here (<= 10^7)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True
