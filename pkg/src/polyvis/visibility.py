"""Exact counts of visible and coprime points over the square grid [1, N]^2.

A point (a, b) is visible along its curve iff no column a' < a carries a
lattice point of the same curve, i.e. no a' with P(a) | b * P(a').
Several routes to the same counts are kept deliberately independent so
they can check each other: fraction deduplication, the per-column
multiple sieve, inclusion-exclusion complements, and the literal
divisibility scan.
"""

import multiprocessing
import os
from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple

import numpy as np

from .errors import GridTooLargeError
from .missing import _ie_count, _mark_multiples, _mark_multiples_count, row_q_values
from .poly import PolyNoConst
from .primes import primes_up_to

DEDUP_MAX_GRID = 2000
VERIFY_MAX_GRID = 1000
CLASSIFY_MAX_GRID = 200


class ReducedFraction(NamedTuple):
    """b / P(a) in lowest terms; the identity of a curve through (a, b)."""

    num: int
    den: int

    @classmethod
    def from_pair(cls, num: int, den: int) -> "ReducedFraction":
        g = gcd(num, den)
        return cls(num // g, den // g)


@dataclass(frozen=True)
class GridCount:
    grid_side: int
    count: int
    method: str

    @property
    def ratio(self) -> float:
        return self.count / self.grid_side**2


@dataclass(frozen=True)
class SubsetReport:
    """Violations of the coprimality-implies-visibility inclusion."""

    grid_side: int
    violations: tuple[tuple[int, int, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def is_s_member(poly: PolyNoConst, a: int, b: int) -> bool:
    """True iff gcd(P(a), b) = 1."""
    return gcd(poly.eval(a), b) == 1


def is_visible_brute(poly: PolyNoConst, a: int, b: int) -> bool:
    """Scan every earlier column for a lattice point on the same curve."""
    pa = poly.eval(a)
    for ap in range(1, a):
        if b * poly.eval(ap) % pa == 0:
            return False
    return True


def count_s(poly: PolyNoConst, n: int) -> GridCount:
    """|{(a, b) : gcd(P(a), b) = 1}| by Moebius inclusion-exclusion.

    Only primes <= n dividing P(a) can hit a b <= n, so each column needs
    the subset sum over that small prime set, not a full factorization of
    the (possibly ~10^26) value.
    """
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    primes = primes_up_to(n)
    total = 0
    for a in range(1, n + 1):
        v = poly.eval(a)
        divs = [p for p in primes if v % p == 0]
        total += n - _ie_count(divs, n)
    return GridCount(n, total, "mobius")


def gcd_k(a: int, b: int, k: int) -> int:
    """Largest l with l | a and l^k | b, by scanning the divisors of a."""
    if a < 1 or b < 1 or k < 1:
        raise ValueError("arguments must be positive")
    best = 1
    for d in range(1, isqrt(a) + 1):
        if a % d == 0:
            for l in (d, a // d):
                if l > best and b % l**k == 0:
                    best = l
    return best


# ---------------------------------------------------------------------------
# V-counting methods
# ---------------------------------------------------------------------------


def count_v_dedup(poly: PolyNoConst, n: int) -> GridCount:
    """|V| as the number of distinct reduced fractions b / P(a).

    Holds up to n^2 keys in memory, so grids above DEDUP_MAX_GRID are
    refused rather than silently degraded; the sieve is the scalable path.
    """
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    if n > DEDUP_MAX_GRID:
        raise GridTooLargeError(f"dedup holds n^2 fractions; capped at {DEDUP_MAX_GRID}, got {n}")
    seen: set[ReducedFraction] = set()
    for v in poly.evals_up_to(n):
        for b in range(1, n + 1):
            seen.add(ReducedFraction.from_pair(b, v))
    return GridCount(n, len(seen), "dedup")


def _sieve_stride_invisible(args: tuple[tuple[int, ...], int, int, int]) -> int:
    """Invisible count over columns a = offset+1, offset+1+step, ... <= n."""
    coeffs, n, offset, step = args
    evals = PolyNoConst(coeffs).evals_up_to(n)
    invisible = 0
    for a in range(offset + 1, n + 1, step):
        if a == 1:
            continue
        qs = row_q_values(evals, a, cap=n)
        if qs:
            invisible += _mark_multiples_count(qs, n)
    return invisible


def count_v_sieve(poly: PolyNoConst, n: int, threads: int = 1) -> GridCount:
    """|V| by marking invisible heights column by column.

    threads <= 0 means one worker per CPU; columns are dealt round-robin
    so the O(a) rows spread evenly, and the total is an order-independent
    integer sum.
    """
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    if threads <= 0:
        threads = os.cpu_count() or 1
    threads = min(threads, n)
    if threads == 1:
        invisible = _sieve_stride_invisible((poly.coeffs, n, 0, 1))
    else:
        jobs = [(poly.coeffs, n, off, threads) for off in range(threads)]
        with multiprocessing.Pool(threads) as pool:
            invisible = sum(pool.map(_sieve_stride_invisible, jobs))
    return GridCount(n, n * n - invisible, "sieve")


def classify_points(poly: PolyNoConst, n: int) -> list[tuple[int, int, int]]:
    """(a, b, visible 0/1) for every grid point; plot-export sized grids only."""
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    if n > CLASSIFY_MAX_GRID:
        raise GridTooLargeError(f"classification export capped at {CLASSIFY_MAX_GRID}, got {n}")
    evals = poly.evals_up_to(n)
    out = []
    for a in range(1, n + 1):
        marked = _mark_multiples(row_q_values(evals, a, cap=n), n)
        out.extend((a, b, 1 - marked[b]) for b in range(1, n + 1))
    return out


def count_v_complement(poly: PolyNoConst, n: int) -> GridCount:
    """|V| = n^2 minus the inclusion-exclusion invisible totals."""
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    evals = poly.evals_up_to(n)
    invisible = sum(_ie_count(row_q_values(evals, a), n) for a in range(2, n + 1))
    return GridCount(n, n * n - invisible, "complement")


# ---------------------------------------------------------------------------
# reference scan (the slow, definition-level route)
# ---------------------------------------------------------------------------


def _rows_fit_int64(evals: list[int], n: int) -> bool:
    return (n * evals[-1]).bit_length() <= 62


def _invisible_row_mask(evals: list[int], a: int, n: int, b_arr) -> np.ndarray:
    """Boolean mask over b in [1, n]: default-invisible per the definition."""
    pa = evals[a - 1]
    mask = np.zeros(n, dtype=bool)
    for ap in range(a - 1):
        mask |= b_arr * evals[ap] % pa == 0
    return mask


def _invisible_row_py(evals: list[int], a: int, n: int) -> bytearray:
    pa = evals[a - 1]
    row = evals[: a - 1]
    out = bytearray(n)
    for b in range(1, n + 1):
        for e in row:
            if b * e % pa == 0:
                out[b - 1] = 1
                break
    return out


def count_v_brute(poly: PolyNoConst, n: int) -> int:
    """|V| straight from the definition: test every (a', b) divisibility.

    Vectorized over b when the products fit in int64, otherwise an exact
    big-integer fallback. Quadratic per column; meant as the oracle the
    fast methods are compared against.
    """
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    evals = poly.evals_up_to(n)
    invisible = 0
    if _rows_fit_int64(evals, n):
        ev64 = np.array(evals, dtype=np.int64)
        b_arr = np.arange(1, n + 1, dtype=np.int64)
        for a in range(2, n + 1):
            invisible += int(_invisible_row_mask(ev64, a, n, b_arr).sum())
    else:
        for a in range(2, n + 1):
            invisible += sum(_invisible_row_py(evals, a, n))
    return n * n - invisible


def verify_subset(poly: PolyNoConst, n: int) -> SubsetReport:
    """Exhaustively check gcd(P(a), b) = 1 implies visible and gcd(a, b) = 1.

    Visibility is decided by the definition-level scan, not the sieve, so
    this is an independent check of the inclusion. Violations are data.
    """
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    if n > VERIFY_MAX_GRID:
        raise GridTooLargeError(f"subset check scales as n^3; capped at {VERIFY_MAX_GRID}, got {n}")
    evals = poly.evals_up_to(n)
    violations: list[tuple[int, int, str]] = []
    if _rows_fit_int64(evals, n):
        ev64 = np.array(evals, dtype=np.int64)
        b_arr = np.arange(1, n + 1, dtype=np.int64)
        for a in range(1, n + 1):
            in_s = np.gcd(b_arr, ev64[a - 1]) == 1
            not_coprime = np.gcd(b_arr, a) != 1
            invisible = _invisible_row_mask(ev64, a, n, b_arr) if a > 1 else np.zeros(n, dtype=bool)
            for b in np.flatnonzero(in_s & invisible):
                violations.append((a, int(b) + 1, "invisible"))
            for b in np.flatnonzero(in_s & not_coprime):
                violations.append((a, int(b) + 1, "gcd(a,b) > 1"))
    else:
        for a in range(1, n + 1):
            pa = evals[a - 1]
            invisible = _invisible_row_py(evals, a, n)
            for b in range(1, n + 1):
                if gcd(pa, b) != 1:
                    continue
                if invisible[b - 1]:
                    violations.append((a, b, "invisible"))
                if gcd(a, b) != 1:
                    violations.append((a, b, "gcd(a,b) > 1"))
    return SubsetReport(n, tuple(violations))
