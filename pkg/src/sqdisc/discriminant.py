"""Exact discriminants and square-class tests."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import DomainError, IntPolynomial, compose_power, evaluate_at, is_reciprocal
from .resultant import resultant


def is_square_rational(q: Union[int, Fraction]) -> bool:
    """True iff ``q`` is the square of a rational (zero included)."""
    q = Fraction(q)
    if q == 0:
        return True
    if q < 0:
        return False
    m = q.numerator * q.denominator
    return math.isqrt(m) ** 2 == m


@dataclass(frozen=True)
class DiscriminantValue:
    value: Fraction

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_square(self) -> bool:
        return is_square_rational(self.value)

    def __str__(self) -> str:
        return str(self.value)


def _sign(n: int) -> int:
    return -1 if (n * (n - 1) // 2) % 2 else 1


def discriminant(f: IntPolynomial) -> DiscriminantValue:
    """``lc^(2n-2) * prod_{i<j} (a_i - a_j)^2`` computed from Res(f, f')."""
    if f.is_zero():
        raise DomainError("discriminant of the zero polynomial")
    n = f.degree
    if n == 0:
        return DiscriminantValue(Fraction(1, f.lc**2))
    if n == 1:
        return DiscriminantValue(Fraction(1))
    r = resultant(f, f.derivative())
    q, rem = divmod(r, f.lc)
    assert rem == 0
    return DiscriminantValue(Fraction(_sign(n) * q))


_SQUAREFREE_PRIMES = (2147483647, 2147483629, 2147483587)


def _gcd_degree_mod(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd(a, b) over F_p; lists are constant term first, trimmed."""
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - c * bj) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def is_squarefree(f: IntPolynomial) -> bool:
    """No repeated complex zero. A squarefree reduction mod p settles it fast."""
    if f.degree < 2:
        return True
    df = f.derivative()
    for p in _SQUAREFREE_PRIMES:
        if f.lc % p == 0 or df.lc % p == 0:
            continue
        a = [c % p for c in f.coeffs]
        b = [c % p for c in df.coeffs]
        if _gcd_degree_mod(a, b, p) == 0:
            return True
    return resultant(f, df) != 0


def reciprocal_square_criterion(f: IntPolynomial) -> bool:
    """Square-discriminant test for reciprocal ``f`` via its values at +-1.

    The sign-and-values test is exact for squarefree ``f``. With a repeated
    zero the discriminant is 0, a square, whatever ``f(1) f(-1)`` is.
    """
    if not is_reciprocal(f):
        raise DomainError("criterion needs a reciprocal polynomial")
    sign = -1 if (f.degree // 2) % 2 else 1
    if is_square_rational(sign * evaluate_at(f, 1) * evaluate_at(f, -1)):
        return True
    return not is_squarefree(f)


def _polymod_monic_free(h: list[int], g: list[int]) -> list[Fraction]:
    """``h mod g`` over Q; lists are constant term first."""
    r = [Fraction(x) for x in h]
    dg = len(g) - 1
    lg = g[-1]
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = c / lg
            for j in range(dg + 1):
                r[i - dg + j] -= c * g[j]
    r = r[:dg]
    while r and r[-1] == 0:
        r.pop()
    return r


def discriminant_product_with_power(g: IntPolynomial, k: int) -> DiscriminantValue:
    """Exact ``Disc(g(X) * g(X^k))`` without forming the product.

    Uses Disc(uv) = Disc(u) Disc(v) Res(u, v)^2 together with
    Res(h, h') = k^(kd) ((-1)^(kd) g(0))^(k-1) Res(g, g')^k for h = g(X^k),
    and Res(g, h) = lc(g)^(deg h - deg r) Res(g, r) with r = h mod g.
    """
    if k < 1:
        raise DomainError("k must be positive")
    d = g.degree
    if d < 0:
        raise DomainError("discriminant of the zero polynomial")
    if d == 0:
        return discriminant(IntPolynomial((g.lc**2,)))
    if g[0] == 0:
        raise DomainError("needs g(0) != 0")
    c = g.lc
    dg = discriminant(g).value
    # Disc(h) = sign(kd) * Res(h, h') / lc(h)
    rgg = resultant(g, g.derivative())
    kd = k * d
    res_hh = k**kd * ((-1) ** kd * g[0]) ** (k - 1) * rgg**k
    disc_h = Fraction(_sign(kd) * res_hh, c)
    # Res(g, h) through the remainder of h modulo g
    h = compose_power(g, k)
    r = _polymod_monic_free(list(h.coeffs), list(g.coeffs))
    if not r:
        res_gh = Fraction(0)
    else:
        den = 1
        for x in r:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ri = IntPolynomial(tuple(int(x * den) for x in r))
        # Res(g, r/den) = Res(g, ri) / den^deg g
        res_gh = Fraction(c ** (h.degree - ri.degree) * resultant(g, ri), den**d)
    return DiscriminantValue(dg * disc_h * res_gh**2)
