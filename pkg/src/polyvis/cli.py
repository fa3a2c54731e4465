"""Command-line interface.

Exit codes: 0 success, 1 when a documented size guard refuses the run,
2 when flags or the polynomial encoding fail validation. All output is
byte-deterministic for a fixed command line.
"""

import argparse
import sys

from . import missing, visibility
from .congruence import count_roots, roots_mod_brute
from .density import DEFAULT_PRIME_BOUND, density_s1k, euler_product_density
from .errors import InputError, LimitError
from .poly import parse_poly, pretty_poly

TABLE1_POLYS = ("1,1", "2,0,15", "6,0,4,13", "7,12,4,1,11")


def _sig12(x: float) -> str:
    return f"{x:.12g}"


def _truncated_ratio(count: int, n: int) -> str:
    # reference-table ratios truncate at the third decimal, so match that
    t = count * 1000 // (n * n)
    return f"{t // 1000}.{t % 1000:03d}"


def _write_lines(path: str, lines) -> None:
    with open(path, "w", newline="") as fh:
        for line in lines:
            fh.write(line + "\n")


def cmd_froots(args) -> int:
    poly = parse_poly(args.poly)
    if args.list_roots:
        rc = roots_mod_brute(poly, args.modulus)
        print(rc.count)
        print(" ".join(str(r) for r in rc.roots))
    else:
        print(count_roots(poly, args.modulus).count)
    return 0


def cmd_density(args) -> int:
    bracket = euler_product_density(parse_poly(args.poly), args.prime_bound)
    print(f"{_sig12(bracket.value)} {_sig12(bracket.lower)} {_sig12(bracket.upper)}")
    return 0


def cmd_density_s1k(args) -> int:
    bracket = density_s1k(args.k, args.prime_bound)
    print(f"{_sig12(bracket.value)} {_sig12(bracket.lower)} {_sig12(bracket.upper)}")
    return 0


def cmd_count_s(args) -> int:
    print(visibility.count_s(parse_poly(args.poly), args.n).count)
    return 0


def cmd_count_v(args) -> int:
    poly = parse_poly(args.poly)
    if args.method == "dedup":
        result = visibility.count_v_dedup(poly, args.n)
    else:
        result = visibility.count_v_sieve(poly, args.n, threads=args.threads)
    print(result.count)
    return 0


def cmd_classify(args) -> int:
    rows = visibility.classify_points(parse_poly(args.poly), args.n)
    _write_lines(args.out, ["a,b,visible"] + [f"{a},{b},{v}" for a, b, v in rows])
    return 0


def cmd_table1(args) -> int:
    print("polynomial,ratio")
    for text in TABLE1_POLYS:
        poly = parse_poly(text)
        result = visibility.count_v_sieve(poly, args.n, threads=args.threads)
        print(f"{pretty_poly(poly)},{_truncated_ratio(result.count, args.n)}")
    return 0


def cmd_table2(args) -> int:
    poly = parse_poly("1,1")
    for a in range(1, args.max_a + 1):
        bs = missing.missing_b_set(poly, a).bs
        print(f"{a},{' '.join(str(b) for b in bs) if bs else 'none'}")
    return 0


def cmd_conjecture_scan(args) -> int:
    n = args.n if args.n is not None else args.max_a
    diag = missing.conjecture_scan(parse_poly(args.poly), args.max_a, n)
    _write_lines(
        args.out,
        ["a,k_a,c1,n,c"]
        + [f"{r.a},{r.k_a},{_sig12(r.c1)},{r.n_invisible},{_sig12(r.c)}" for r in diag.rows],
    )
    if args.avg_out:
        _write_lines(
            args.avg_out,
            ["A,avg_c1"] + [f"{A},{_sig12(avg)}" for A, avg in diag.averages],
        )
    print(f"wrote {len(diag.rows)} rows (grid side {n})")
    return 0


def cmd_verify_subset(args) -> int:
    report = visibility.verify_subset(parse_poly(args.poly), args.n)
    print(f"violations: {len(report.violations)}")
    for a, b, reason in report.violations:
        print(f"{a},{b},{reason}")
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyvis",
        description="Exact visibility counts and density bounds for lattice points "
        "along polynomial curve families y = q * P(x).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("froots", cmd_froots, "count roots of P(d) = 0 mod l")
    p.add_argument("--poly", required=True, help="coefficients, highest degree first, e.g. 2,0,15")
    p.add_argument("--modulus", type=_positive, required=True)
    p.add_argument("--list-roots", action="store_true", help="scan and print the roots too")

    p = add("density", cmd_density, "Euler-product density bound for gcd(P(a), b) = 1")
    p.add_argument("--poly", required=True)
    p.add_argument("--prime-bound", type=_positive, default=DEFAULT_PRIME_BOUND)

    p = add("density-s1k", cmd_density_s1k, "closed-form density bound for x^2 + kx")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--prime-bound", type=_positive, default=DEFAULT_PRIME_BOUND)

    p = add("count-s", cmd_count_s, "count pairs with gcd(P(a), b) = 1 in [1, n]^2")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = add("count-v", cmd_count_v, "count visible points in [1, n]^2")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--method", choices=("sieve", "dedup"), default="sieve")
    p.add_argument("--threads", type=_nonnegative, default=0, help="0 = one per CPU")

    p = add("classify", cmd_classify, "per-point visibility CSV (n <= 200)")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--out", required=True)

    p = add("table1", cmd_table1, "visible-point ratios for the four reference families")
    p.add_argument("--n", type=_positive, default=5000)
    p.add_argument("--threads", type=_nonnegative, default=0, help="0 = one per CPU")

    p = add("table2", cmd_table2, "missing-multiple sets of x^2 + x, one row per column")
    p.add_argument("--max-a", type=_positive, required=True)

    p = add("conjecture-scan", cmd_conjecture_scan, "per-column diagnostics CSV")
    p.add_argument("--poly", required=True)
    p.add_argument("--max-a", type=_positive, required=True)
    p.add_argument("--n", type=_positive, default=None, help="grid side (default: max-a)")
    p.add_argument("--out", required=True)
    p.add_argument("--avg-out", default=None, help="also write the running c1 averages")

    p = add("verify-subset", cmd_verify_subset, "exhaustive subset check (n <= 1000)")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=_positive, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
