import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from folgerm.polynomials import Poly


def random_poly(rng: random.Random, nvars: int = 2, max_degree: int = 4,
                max_terms: int = 6, min_order: int = 0) -> Poly:
    """Small random polynomial with single-digit rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        while True:
            exponents = tuple(rng.randint(0, max_degree) for _ in range(nvars))
            if min_order <= sum(exponents) <= max_degree:
                break
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        terms[exponents] = terms.get(exponents, 0) + coeff
    return Poly(nvars, terms)


def random_nonzero_poly(rng: random.Random, **kw) -> Poly:
    while True:
        p = random_poly(rng, **kw)
        if not p.is_zero:
            return p
