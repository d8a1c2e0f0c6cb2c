"""Square-discriminant constructions with constrained coefficients.

Given ``f`` with coefficients in a finite set ``N`` and a zero ``alpha`` of
``f`` in the open unit disk, the series ``F = f / (1 - X^(n+1))`` has
periodic coefficients and the same zeros as ``f`` inside the disk. Its
truncation ``g`` is turned into a polynomial ``f_k`` with square
discriminant and coefficients in ``N``; a Rouche bound picks the truncation
order ``k`` so that ``f_k`` keeps a zero near ``alpha``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .poly import DomainError, IntPolynomial, evaluate_at, negate_variable, reverse

MAX_SAMPLES = 2**20
BASE_SAMPLES = 4096


class Case(str, Enum):
    NEGATION = "negation"
    MULTIPLICATIVE = "multiplicative"
    PM1 = "pm1"

    @classmethod
    def parse(cls, text: str) -> Optional["Case"]:
        aliases = {
            "auto": None,
            "i": cls.NEGATION,
            "ii": cls.MULTIPLICATIVE,
            "iii": cls.PM1,
        }
        if text in aliases:
            return aliases[text]
        return cls(text)


AUTO_ORDER = (Case.NEGATION, Case.PM1, Case.MULTIPLICATIVE)


@dataclass(frozen=True)
class CoeffSet:
    elements: frozenset[int]
    height: int = field(init=False)
    negation_closed: bool = field(init=False)
    multiplication_closed: bool = field(init=False)
    contains_pm1: bool = field(init=False)

    def __post_init__(self):
        els = frozenset(int(a) for a in self.elements)
        if not els or els == {0}:
            raise DomainError("coefficient set must be nonempty and not {0}")
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "height", max(abs(a) for a in els))
        object.__setattr__(self, "negation_closed", all(-a in els for a in els))
        object.__setattr__(
            self, "multiplication_closed", all(a * b in els for a in els for b in els)
        )
        object.__setattr__(self, "contains_pm1", {1, -1} <= els)

    def __contains__(self, a: int) -> bool:
        return a in self.elements

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    def smallest_nonzero(self) -> int:
        """Nonzero element of least absolute value, ties toward positive."""
        return min((a for a in self.elements if a), key=lambda a: (abs(a), -a))

    def smallest(self) -> int:
        return min(self.elements, key=lambda a: (abs(a), -a))

    def supports(self, case: Case) -> bool:
        return {
            Case.NEGATION: self.negation_closed,
            Case.MULTIPLICATIVE: self.multiplication_closed,
            Case.PM1: self.contains_pm1,
        }[case]

    def applicable_cases(self) -> list[Case]:
        return [c for c in AUTO_ORDER if self.supports(c)]

    def format(self) -> str:
        return ",".join(str(a) for a in self.sorted())


def classify_coeff_set(elements: Iterable[int]) -> CoeffSet:
    return CoeffSet(frozenset(elements))


def check_membership(f: IntPolynomial, cs: CoeffSet) -> None:
    """Raise unless ``f`` lies in P(N): coefficients in N and f(0) != 0."""
    if f.is_zero() or f[0] == 0:
        raise DomainError("f(0) must be nonzero")
    bad = [a for a in f.coeffs if a not in cs]
    if bad:
        raise DomainError(f"coefficients {sorted(set(bad))} not in {cs.format()}")


def series_coefficients(f: IntPolynomial, count: int) -> list[int]:
    """First ``count`` coefficients of f / (1 - X^(n+1)); period n + 1."""
    period = f.degree + 1
    return [f[j % period] for j in range(count)]


def periodic_truncation(
    f: IntPolynomial, k: int, cs: CoeffSet, force_nonzero_at_one: bool = False
) -> IntPolynomial:
    """Degree ``k - 1`` truncation of the periodic series of ``f``.

    A vanishing top coefficient is replaced by ``cs.smallest_nonzero()``. With
    ``force_nonzero_at_one`` the top coefficient is moved to +1 or -1 when
    needed to make g(1) nonzero, preferring the sign that lands g(1) on +-1,
    then +1.
    """
    check_membership(f, cs)
    if k < 2:
        raise DomainError("truncation order must be >= 2")
    b = series_coefficients(f, k)
    if b[-1] == 0:
        b[-1] = cs.smallest_nonzero()
    if force_nonzero_at_one and sum(b) == 0:
        if not cs.contains_pm1:
            raise DomainError("forcing g(1) != 0 needs +-1 in the set")
        rest = sum(b) - b[-1]
        options = [s for s in (1, -1) if rest + s != 0]
        landing = [s for s in options if abs(rest + s) == 1]
        b[-1] = (landing or options)[0]
    return IntPolynomial(tuple(b))


def _check_shape(g: IntPolynomial, k: int, parity: int) -> None:
    if k < 1 or k % 2 != parity:
        raise DomainError(f"k = {k} has the wrong parity")
    if g.degree != k - 1:
        raise DomainError(f"deg g = {g.degree} but k - 1 = {k - 1}")
    if g[0] == 0:
        raise DomainError("g(0) must be nonzero")


def construct_case_i(g: IntPolynomial, k: int, a: int, cs: Optional[CoeffSet] = None) -> IntPolynomial:
    """``h + a X^(2k) + X^(2k+1) h_rev`` with ``h = g(X) + X^k g(-X)``, k even.

    Reciprocal of degree 4k with f(1) = f(-1).
    """
    _check_shape(g, k, 0)
    if cs is not None:
        if not cs.negation_closed:
            raise DomainError("case i needs a negation-closed set")
        if a not in cs:
            raise DomainError(f"a = {a} not in the set")
    h = g + negate_variable(g).shift(k)
    return h + IntPolynomial.monomial(2 * k, a) + reverse(h).shift(2 * k + 1)


def construct_case_ii(g: IntPolynomial, k: int, cs: Optional[CoeffSet] = None) -> IntPolynomial:
    """``g(X) g(X^k)`` for odd k; every coefficient is a single product."""
    _check_shape(g, k, 1)
    if cs is not None and not cs.multiplication_closed:
        raise DomainError("case ii needs a multiplication-closed set")
    out = [0] * (k * k)
    for j, bj in enumerate(g.coeffs):
        for i, bi in enumerate(g.coeffs):
            out[i + k * j] = bi * bj
    return IntPolynomial(tuple(out))


def case_iii_parameters(g: IntPolynomial) -> tuple[int, int]:
    """``(u, ell)`` with u = -sign g(1) and ell = 4 g(1) - u."""
    g1 = evaluate_at(g, 1)
    if g1 == 0:
        raise DomainError("case iii needs g(1) != 0")
    u = -1 if g1 > 0 else 1
    return u, 4 * g1 - u


def construct_case_iii(g: IntPolynomial, k: int, cs: Optional[CoeffSet] = None) -> IntPolynomial:
    """``(1+X^k) g + u X^(2k) p + X^(2k+|ell|) (1+X^k) g_rev``, k odd.

    ``p = 1 + ... + X^(|ell|-1)``. The result is reciprocal, its degree is
    ``4k + 4|g(1)|`` and ``f(1) = f(-1) = u``.
    """
    _check_shape(g, k, 1)
    if cs is not None and not cs.contains_pm1:
        raise DomainError("case iii needs +-1 in the set")
    u, ell = case_iii_parameters(g)
    L = abs(ell)
    one_xk = IntPolynomial((1,) + (0,) * (k - 1) + (1,))
    low = one_xk * g
    mid = IntPolynomial((u,) * L).shift(2 * k)
    high = (one_xk * reverse(g)).shift(2 * k + L)
    return low + mid + high


def construct(case: Case, g: IntPolynomial, k: int, cs: CoeffSet) -> IntPolynomial:
    if case is Case.NEGATION:
        return construct_case_i(g, k, cs.smallest(), cs)
    if case is Case.MULTIPLICATIVE:
        return construct_case_ii(g, k, cs)
    return construct_case_iii(g, k, cs)


# --- Rouche truncation order ------------------------------------------------


def min_order(case: Case) -> int:
    return 2 if case is Case.NEGATION else 3


def coefficient_bound(cs: CoeffSet, case: Case) -> int:
    """Bound on the coefficients of F minus the polynomial compared with it."""
    if case is Case.MULTIPLICATIVE:
        return 2 * cs.height
    return cs.height + max(cs.height, 1)


def rouche_order(B: float, m: float, r: float, case: Case) -> int:
    """Smallest parity-valid k with ``B r^(k-1) / (1-r) < m``."""
    if not 0 <= r < 1:
        raise DomainError("need 0 <= r < 1")
    if m <= 0:
        raise DomainError("m must be positive")
    kmin = min_order(case)

    def ok(k):
        return B * r ** (k - 1) / (1 - r) < m

    if B == 0 or ok(kmin):
        k = kmin
    else:
        if r == 0:
            k = kmin
        else:
            est = math.log(m * (1 - r) / B) / math.log(r)
            k = max(kmin, int(math.floor(est)) + 1)
            while k > kmin and ok(k - 1):
                k -= 1
            while not ok(k):
                k += 1
    want = 0 if case is Case.NEGATION else 1
    if k % 2 != want:
        k += 1
    return k


@dataclass(frozen=True)
class TruncationChoice:
    k: int
    R: float
    m: float
    B: int
    r: float
    samples: int


class IsolationFailure(RuntimeError):
    pass


def choose_truncation_order(
    f: IntPolynomial,
    alpha: complex,
    epsilon: float,
    cs: CoeffSet,
    case: Case,
    roots=None,
) -> TruncationChoice:
    from .roots import find_all_roots, isolation_radius, min_modulus_on_circle

    if abs(alpha) >= 1:
        raise DomainError("alpha must lie in the open unit disk")
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    if roots is None:
        roots = find_all_roots(f).roots
    in_disk = [z for z in roots if abs(z) <= 1]
    R = isolation_radius(in_disk, alpha, min(epsilon, (1 - abs(alpha)) / 2))
    B = coefficient_bound(cs, case)
    r = abs(alpha) + R
    samples = BASE_SAMPLES
    while True:
        m = min_modulus_on_circle(f, alpha, R, samples)
        if m > 0 or samples >= MAX_SAMPLES:
            break
        samples *= 2
    if m <= 0:
        raise IsolationFailure("could not certify a positive minimum on the circle")
    k = rouche_order(B, m, r, case)
    return TruncationChoice(k=k, R=R, m=m, B=B, r=r, samples=samples)
