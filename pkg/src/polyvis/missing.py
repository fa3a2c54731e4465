"""Per-column structure of invisible points.

For a fixed column a, the heights b that lose visibility are exactly the
multiples of q = P(a)/gcd(P(a), P(a')) for some earlier column a' < a.
Keeping only the divisibility-minimal q values gives the canonical
"missing multiples" set of the column; counting the marked heights up to
N is then either a direct sieve or inclusion-exclusion over lcms.
"""

from dataclasses import dataclass
from math import gcd, lcm
from typing import NamedTuple

from .errors import TooManyTermsError
from .poly import PolyNoConst

MAX_IE_SET_SIZE = 30


@dataclass(frozen=True)
class MissingBSet:
    """Divisibility-minimal b's whose multiples are invisible at column a."""

    a: int
    bs: tuple[int, ...]


class ScanRow(NamedTuple):
    a: int
    k_a: int
    c1: float
    n_invisible: int
    c: float


@dataclass(frozen=True)
class ConjectureDiagnostics:
    """Output of conjecture_scan: per-column rows at a fixed grid side."""

    grid_side: int
    rows: tuple[ScanRow, ...]
    averages: tuple[tuple[int, float], ...]  # (A, mean of c1 over a <= A)


def _minimal_by_divisibility(values) -> list[int]:
    mins: list[int] = []
    for v in sorted(values):
        if not any(v % m == 0 for m in mins):
            mins.append(v)
    return mins


def row_q_values(evals: list[int], a: int, cap: int | None = None) -> list[int]:
    """Minimal q's for column a, given evals = [P(1), ..., P(>=a)].

    With cap set, q values above it are dropped before minimizing; their
    multiples cannot occur below the cap, so marked sets are unchanged.
    """
    pa = evals[a - 1]
    if cap is None:
        qs = {pa // g for g in map(gcd, evals[: a - 1], (pa,) * (a - 1))}
    else:
        qs = set()
        for g in map(gcd, evals[: a - 1], (pa,) * (a - 1)):
            if pa <= g * cap:
                qs.add(pa // g)
    return _minimal_by_divisibility(qs)


def missing_b_set(poly: PolyNoConst, a: int) -> MissingBSet:
    """The sorted minimal missing-multiple set of column a (any grid side)."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    evals = poly.evals_up_to(a)
    return MissingBSet(a, tuple(row_q_values(evals, a)))


def _ie_count(bs, n: int) -> int:
    """How many integers in [1, n] are divisible by some element of bs.

    Inclusion-exclusion over subset lcms, pruning any branch whose lcm
    already exceeds n (all supersets contribute floor(n/lcm) = 0).
    """
    bs = list(bs)
    if len(bs) > MAX_IE_SET_SIZE:
        raise TooManyTermsError(f"{len(bs)} terms would need 2^{len(bs)} subsets")
    total = 0

    def descend(start: int, l: int, sign: int) -> None:
        nonlocal total
        for j in range(start, len(bs)):
            nl = lcm(l, bs[j])
            if nl > n:
                continue
            total += sign * (n // nl)
            descend(j + 1, nl, -sign)

    descend(0, 1, 1)
    return total


def _mark_multiples(bs, n: int) -> bytearray:
    """Flags over [1, n] (index 0 unused): 1 where some element divides."""
    marked = bytearray(n + 1)
    for b in bs:
        for m in range(b, n + 1, b):
            marked[m] = 1
    return marked


def _mark_multiples_count(bs, n: int) -> int:
    """Same count as _ie_count, by marking a boolean array."""
    return sum(_mark_multiples(bs, n)[1:])


def n_missing_inclusion_exclusion(poly: PolyNoConst, a: int, n: int) -> int:
    """n(a, N): invisible heights b <= N at column a, via inclusion-exclusion."""
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    return _ie_count(missing_b_set(poly, a).bs, n)


def n_missing_sieve(poly: PolyNoConst, a: int, n: int) -> int:
    """Oracle for n(a, N): mark multiples of each missing b directly."""
    if n < 1:
        raise ValueError(f"grid side must be >= 1, got {n}")
    return _mark_multiples_count(missing_b_set(poly, a).bs, n)


def conjecture_scan(poly: PolyNoConst, a_max: int, n: int) -> ConjectureDiagnostics:
    """Diagnostics table for columns a <= a_max at grid side n.

    Per column: the set size k_a, the reciprocal sum c1(a) = sum 1/b_i
    (an upper bound on the invisible fraction), the exact invisible count
    n(a, n) and its ratio c = n(a, n)/n. The running averages of c1
    form the decay series used to judge whether the visible density
    tends to one.
    """
    if a_max < 1 or n < 1:
        raise ValueError("a_max and n must be >= 1")
    evals = poly.evals_up_to(a_max)
    rows = []
    averages = []
    c1_sum = 0.0
    for a in range(1, a_max + 1):
        bs = row_q_values(evals, a)
        if len(bs) > MAX_IE_SET_SIZE:
            raise TooManyTermsError(f"column {a}: {len(bs)} terms")
        c1 = sum(1.0 / b for b in bs)
        inv = _ie_count(bs, n)
        rows.append(ScanRow(a, len(bs), c1, inv, inv / n))
        c1_sum += c1
        averages.append((a, c1_sum / a))
    return ConjectureDiagnostics(n, tuple(rows), tuple(averages))
