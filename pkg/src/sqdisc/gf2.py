"""Polynomials over GF(2), packed into Python ints (bit i = coefficient of X^i)."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import DomainError, IntPolynomial


@dataclass(frozen=True)
class F2Polynomial:
    value: int = 0

    @classmethod
    def from_int_poly(cls, f: IntPolynomial) -> "F2Polynomial":
        v = 0
        for i, a in enumerate(f.coeffs):
            if a & 1:
                v |= 1 << i
        return cls(v)

    @property
    def bits(self) -> tuple[bool, ...]:
        return tuple(bool(self.value >> i & 1) for i in range(self.value.bit_length()))

    @property
    def degree(self) -> int:
        return self.value.bit_length() - 1

    def derivative(self) -> "F2Polynomial":
        # odd exponents survive, shifted down by one
        odd = self.value & int("10" * ((self.value.bit_length() + 1) // 2) or "0", 2)
        return F2Polynomial(odd >> 1)


def _mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def gcd(a: F2Polynomial, b: F2Polynomial) -> F2Polynomial:
    x, y = a.value, b.value
    while y:
        x, y = y, _mod(x, y)
    return F2Polynomial(x)


def squarefree_mod2(f: IntPolynomial) -> bool:
    """True iff ``f mod 2`` keeps its degree and is squarefree.

    Either condition failing leaves Disc(f) undecided, so the answer is
    False there; a True answer forces ``Disc(f) != 0``.
    """
    fb = F2Polynomial.from_int_poly(f)
    if fb.value == 0:
        raise DomainError("f vanishes mod 2")
    if fb.degree != f.degree:
        return False
    return gcd(fb, fb.derivative()).value == 1
