"""Visibility of lattice points along polynomial curve families y = q * P(x).

Exact root counts of P(d) = 0 (mod l), Euler-product density bounds with
rigorous truncation brackets, grid counts of visible points by several
independent methods, and per-column diagnostics of the invisible heights.
"""

from . import errors
from .congruence import (
    Factorization,
    RootCount,
    count_roots_mod_prime,
    count_roots,
    count_roots_prime_power,
    factorize,
    roots_mod_brute,
)
from .density import DensityBracket, density_s1k, euler_product_density, zeta_reciprocal
from .missing import (
    ConjectureDiagnostics,
    MissingBSet,
    ScanRow,
    conjecture_scan,
    missing_b_set,
    n_missing_inclusion_exclusion,
    n_missing_sieve,
)
from .poly import PolyNoConst, format_poly, make_poly, parse_poly, pretty_poly
from .visibility import (
    GridCount,
    ReducedFraction,
    SubsetReport,
    classify_points,
    count_s,
    count_v_brute,
    count_v_complement,
    count_v_dedup,
    count_v_sieve,
    gcd_k,
    is_s_member,
    is_visible_brute,
    verify_subset,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "PolyNoConst",
    "make_poly",
    "parse_poly",
    "format_poly",
    "pretty_poly",
    "RootCount",
    "Factorization",
    "roots_mod_brute",
    "factorize",
    "count_roots_prime_power",
    "count_roots",
    "count_roots_mod_prime",
    "DensityBracket",
    "euler_product_density",
    "density_s1k",
    "zeta_reciprocal",
    "GridCount",
    "ReducedFraction",
    "SubsetReport",
    "is_s_member",
    "count_s",
    "gcd_k",
    "is_visible_brute",
    "count_v_dedup",
    "count_v_sieve",
    "count_v_brute",
    "count_v_complement",
    "classify_points",
    "verify_subset",
    "MissingBSet",
    "ScanRow",
    "ConjectureDiagnostics",
    "missing_b_set",
    "n_missing_inclusion_exclusion",
    "n_missing_sieve",
    "conjecture_scan",
]
