"""Dense integer polynomials, constant term first.

``IntPolynomial((1, -1, 1))`` is ``1 - X + X^2``. Coefficients are Python
ints, so every operation here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, complex, float]


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse ``"1,-1,1"`` (constant term first)."""
        parts = [p.strip() for p in text.split(",")]
        if not text.strip() or any(p == "" for p in parts):
            raise DomainError(f"bad polynomial text {text!r}")
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise DomainError(f"bad polynomial text {text!r}") from exc

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (c,))

    def format(self) -> str:
        return ",".join(str(a) for a in self.coeffs) if self.coeffs else "0"

    def __str__(self) -> str:
        return self.format()

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * a for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``X^k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * a for i, a in enumerate(self.coeffs) if i))

    def content(self) -> int:
        from math import gcd

        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def __call__(self, x: Number) -> Number:
        return evaluate_at(self, x)


def evaluate_at(f: IntPolynomial, x: Number) -> Number:
    """Horner evaluation; exact for int and Fraction arguments."""
    acc = 0
    for a in reversed(f.coeffs):
        acc = acc * x + a
    return acc


def reverse(f: IntPolynomial) -> IntPolynomial:
    """``X^deg f * f(1/X)``; only defined when ``f(0) != 0``."""
    if f.is_zero() or f[0] == 0:
        raise DomainError("reverse needs f(0) != 0")
    return IntPolynomial(f.coeffs[::-1])


def is_reciprocal(f: IntPolynomial) -> bool:
    return f.degree >= 0 and f.degree % 2 == 0 and f.coeffs == f.coeffs[::-1]


def compose_power(f: IntPolynomial, k: int) -> IntPolynomial:
    """Return ``f(X^k)``."""
    if k < 1:
        raise DomainError("compose_power needs k >= 1")
    if f.is_zero():
        return f
    out = [0] * (k * f.degree + 1)
    for i, a in enumerate(f.coeffs):
        out[k * i] = a
    return IntPolynomial(tuple(out))


def negate_variable(f: IntPolynomial) -> IntPolynomial:
    """Return ``f(-X)``."""
    return IntPolynomial(tuple(-a if i % 2 else a for i, a in enumerate(f.coeffs)))


def p_n(n: int) -> IntPolynomial:
    """``1 + X + ... + X^n``."""
    return IntPolynomial((1,) * (n + 1))


def as_poly(f: Union[IntPolynomial, Sequence[int], str]) -> IntPolynomial:
    if isinstance(f, IntPolynomial):
        return f
    if isinstance(f, str):
        return IntPolynomial.parse(f)
    return IntPolynomial(tuple(f))
