import random

import pytest

import polyvis as pv

# the four families whose grid ratios the table1 command reports
TABLE1_COEFFS = [(1, 1), (2, 0, 15), (6, 0, 4, 13), (7, 12, 4, 1, 11)]


def random_admissible_polys(count, max_degree, max_coeff, seed):
    """Deterministic corpus of valid coefficient vectors."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        degree = rng.randint(1, max_degree)
        coeffs = [rng.randint(1, max_coeff)] + [rng.randint(0, max_coeff) for _ in range(degree - 1)]
        try:
            out.append(pv.make_poly(coeffs))
        except pv.errors.InputError:
            continue
    return out


@pytest.fixture(scope="session")
def poly_corpus():
    """Hand-picked shapes (pure powers, repeated factors, the table1 set)
    plus seeded random vectors."""
    hand = [
        (1,),
        (1, 1),
        (1, 2),
        (1, 0),
        (1, 0, 0),
        (1, 2, 1),
        (2, 0, 15),
        (6, 0, 4, 13),
        (7, 12, 4, 1, 11),
    ]
    return [pv.make_poly(c) for c in hand] + random_admissible_polys(12, 4, 20, seed=101)


@pytest.fixture(scope="session")
def table1_polys():
    return [pv.make_poly(c) for c in TABLE1_COEFFS]
