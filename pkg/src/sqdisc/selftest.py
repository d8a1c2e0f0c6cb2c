"""Quick randomized property battery behind ``sqdisc selftest``."""

from __future__ import annotations

import random

from .constructions import (
    case_iii_parameters,
    classify_coeff_set,
    construct_case_i,
    construct_case_ii,
    construct_case_iii,
)
from .discriminant import discriminant, reciprocal_square_criterion
from .gf2 import squarefree_mod2
from .poly import IntPolynomial, compose_power, is_reciprocal, p_n, reverse
from .resultant import modular_resultant, resultant, subresultant_prs


def _rand_poly(rng, deg, lo=-3, hi=3):
    while True:
        c = [rng.randint(lo, hi) for _ in range(deg + 1)]
        if c[-1]:
            return IntPolynomial(tuple(c))


def _rand_g(rng, k, choices):
    return IntPolynomial(tuple(rng.choice(choices) for _ in range(k)))


def check_cyclotomic_identity():
    for n in range(1, 31):
        f = IntPolynomial((-1,) + (0,) * n + (1,))
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        if discriminant(f).value != sign * (n + 1) ** (n + 1):
            return False
    return all(discriminant(p_n(n)).is_square for n in range(1, 102, 4))


def random_reciprocal(rng, half_degree, lo=-3, hi=3):
    """Random reciprocal polynomial of degree ``2 * half_degree``."""
    edge = [rng.choice([a for a in range(lo, hi + 1) if a])]
    half = edge + [rng.randint(lo, hi) for _ in range(half_degree - 1)]
    if half_degree == 0:
        return IntPolynomial(tuple(edge))
    return IntPolynomial(tuple(half + [rng.randint(lo, hi)] + half[::-1]))


def check_multiplicativity(rng, trials=200):
    for _ in range(trials):
        f = _rand_poly(rng, rng.randint(0, 6))
        g = _rand_poly(rng, rng.randint(0, 6))
        if discriminant(f * g).value != discriminant(f).value * discriminant(g).value * resultant(f, g) ** 2:
            return False
    return True


def check_resultant_routes(rng, trials=100):
    for _ in range(trials):
        f = _rand_poly(rng, rng.randint(1, 8))
        g = _rand_poly(rng, rng.randint(1, 8))
        if subresultant_prs(f, g) != modular_resultant(f, g):
            return False
    return True


def check_reciprocal_criterion(rng, trials=200):
    for _ in range(trials):
        m = rng.randint(0, 6)
        f = random_reciprocal(rng, m)
        if reciprocal_square_criterion(f) != discriminant(f).is_square:
            return False
    return True


def check_product_square(rng, trials=100):
    for _ in range(trials):
        f = _rand_poly(rng, rng.choice([0, 2, 4, 6, 8]))
        k = rng.choice([1, 3, 5])
        if not discriminant(f * compose_power(f, k)).is_square:
            return False
    return True


def check_constructions(rng, trials=50):
    pm1 = classify_coeff_set({-1, 1})
    for _ in range(trials):
        k = rng.choice([2, 4, 6])
        g = _rand_g(rng, k, [-1, 1])
        fk = construct_case_i(g, k, 1, pm1)
        if not (is_reciprocal(fk) and fk.degree == 4 * k and discriminant(fk).is_square and squarefree_mod2(fk)):
            return False
        k = rng.choice([3, 5])
        g = _rand_g(rng, k, [-1, 1])
        if not discriminant(construct_case_ii(g, k, pm1)).is_square:
            return False
        if g(1) != 0:
            fk = construct_case_iii(g, k, pm1)
            u, _ = case_iii_parameters(g)
            if not (fk(1) == fk(-1) == u and fk.degree % 4 == 0 and discriminant(fk).is_square):
                return False
    return True


def check_reversal(rng, trials=100):
    for _ in range(trials):
        f = _rand_poly(rng, rng.randint(1, 8))
        if f[0] == 0:
            continue
        if reverse(reverse(f)) != f or discriminant(reverse(f)) != discriminant(f):
            return False
    return True


def run(seed: int = 0) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    suites = [
        ("disc(X^(n+1)-1) closed form and p_n squares", check_cyclotomic_identity),
        ("disc(fg) = disc(f) disc(g) Res(f,g)^2", lambda: check_multiplicativity(rng)),
        ("subresultant and modular resultants agree", lambda: check_resultant_routes(rng)),
        ("reciprocal criterion matches exact squareness", lambda: check_reciprocal_criterion(rng)),
        ("f(X) f(X^k) has square discriminant", lambda: check_product_square(rng)),
        ("constructions i/ii/iii", lambda: check_constructions(rng)),
        ("reversal is a discriminant-preserving involution", lambda: check_reversal(rng)),
    ]
    return [(name, bool(fn())) for name, fn in suites]
