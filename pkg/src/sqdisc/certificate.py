"""End-to-end approximation certificates and their independent re-check."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constructions import (
    Case,
    CoeffSet,
    TruncationChoice,
    case_iii_parameters,
    check_membership,
    choose_truncation_order,
    classify_coeff_set,
    coefficient_bound,
    construct,
    periodic_truncation,
)
from .discriminant import (
    DiscriminantValue,
    discriminant,
    discriminant_product_with_power,
    reciprocal_square_criterion,
)
from .poly import DomainError, IntPolynomial, is_reciprocal, reverse
from .roots import (
    ACCEPT_RESIDUAL,
    find_all_roots,
    isolation_radius,
    min_modulus_on_circle,
    nearest_root,
)

# certificates carry discriminants with tens of thousands of digits
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

ROOT_MATCH = 1e-6
FORMAT = "sqdisc-certificate/1"


class UnsupportedCoeffSet(DomainError):
    pass


class CertificateError(RuntimeError):
    """A freshly built certificate failed its own invariants."""


@dataclass(frozen=True)
class ApproxCertificate:
    source: IntPolynomial
    coeff_set: CoeffSet
    inverted: bool
    alpha: complex
    epsilon: float
    case_used: Case
    k: int
    g: IntPolynomial
    f_k: IntPolynomial
    beta: complex
    achieved_error: float
    rouche: TruncationChoice
    disc: DiscriminantValue

    @property
    def working(self) -> IntPolynomial:
        return reverse(self.source) if self.inverted else self.source

    @property
    def in_A_n(self) -> bool:
        return self.disc.is_square and not self.disc.is_zero

    @property
    def in_wreath(self) -> bool:
        return is_reciprocal(self.f_k)


def select_case(cs: CoeffSet, case: Optional[Case]) -> Case:
    if case is None:
        cases = cs.applicable_cases()
        if not cases:
            raise UnsupportedCoeffSet(f"unsupported coefficient set {cs.format()}")
        return cases[0]
    if not cs.supports(case):
        raise UnsupportedCoeffSet(f"case {case.value} does not apply to {cs.format()}")
    return case


def certificate_discriminant(case: Case, g: IntPolynomial, k: int, f_k: IntPolynomial) -> DiscriminantValue:
    if case is Case.MULTIPLICATIVE:
        # f_k = g(X) g(X^k) can have degree k^2 - 1; use the product formula
        return discriminant_product_with_power(g, k)
    return discriminant(f_k)


def scaled_residual(f: IntPolynomial, z: complex) -> float:
    import numpy as np

    C = np.array([f.coeffs], dtype=float)
    from .roots import _eval_ratio

    _, res = _eval_ratio(C, np.array([[z]], dtype=complex))
    return float(res[0, 0])


def _candidate_roots(case: Case, g: IntPolynomial, f_k: IntPolynomial):
    # in case ii every zero of g is a zero of f_k
    return find_all_roots(g if case is Case.MULTIPLICATIVE else f_k).roots


def approximate_square_disc(
    f: IntPolynomial,
    alpha: complex,
    epsilon: float,
    cs: CoeffSet,
    case: Optional[Case] = None,
    inverted: bool = False,
    source: Optional[IntPolynomial] = None,
) -> ApproxCertificate:
    """Certify a square-discriminant polynomial with a zero within epsilon of alpha.

    ``f`` is the polynomial whose zero ``alpha`` is approximated. When the
    caller inverted a zero outside the disk, ``source`` is the original
    polynomial and ``f`` must equal its reversal.
    """
    check_membership(f, cs)
    if abs(abs(alpha) - 1) < 1e-12:
        raise DomainError("zeros on the unit circle are not approximated")
    if abs(alpha) >= 1:
        raise DomainError("alpha must lie in the open unit disk; invert via reverse first")
    case = select_case(cs, case)
    roots = find_all_roots(f).roots
    _, d = nearest_root(roots, alpha)
    if d > ROOT_MATCH:
        raise DomainError(f"alpha is not a zero of f (nearest root at distance {d:.3g})")
    choice = choose_truncation_order(f, alpha, epsilon, cs, case, roots=roots)
    k = choice.k
    g = periodic_truncation(f, k, cs, force_nonzero_at_one=case is Case.PM1)
    f_k = construct(case, g, k, cs)
    beta, err = nearest_root(_candidate_roots(case, g, f_k), alpha)
    disc = certificate_discriminant(case, g, k, f_k)
    cert = ApproxCertificate(
        source=source if source is not None else f,
        coeff_set=cs,
        inverted=inverted,
        alpha=alpha,
        epsilon=epsilon,
        case_used=case,
        k=k,
        g=g,
        f_k=f_k,
        beta=beta,
        achieved_error=err,
        rouche=choice,
        disc=disc,
    )
    failed = [name for name, ok in check_certificate(cert, recompute=False) if not ok]
    if failed:
        raise CertificateError(f"certificate invariants failed: {failed}")
    return cert


# --- checking ---------------------------------------------------------------


def check_certificate(cert: ApproxCertificate, recompute: bool = True) -> list[tuple[str, bool]]:
    """Every certificate invariant as (name, passed).

    With ``recompute`` the truncation, construction, Rouche minimum, roots and
    discriminant are all rebuilt from the source polynomial and compared.
    """
    out: list[tuple[str, bool]] = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        out.append((name, ok))

    cs = cert.coeff_set
    f = cert.working
    case = cert.case_used
    k = cert.k
    rc = cert.rouche

    check("case applies to set", lambda: cs.supports(case))
    check("source in P(N)", lambda: check_membership(f, cs) is None)
    check("alpha in open disk", lambda: abs(cert.alpha) < 1)
    check("epsilon positive", lambda: cert.epsilon > 0)
    check("k parity", lambda: k % 2 == (0 if case is Case.NEGATION else 1) and k >= 2)
    check("g is the periodic truncation", lambda: cert.g == periodic_truncation(f, k, cs, case is Case.PM1))
    check("f_k is the construction", lambda: cert.f_k == construct(case, cert.g, k, cs))
    check("f_k coefficients in N", lambda: all(a in cs for a in cert.f_k.coeffs) and cert.f_k[0] != 0)

    def degree_ok():
        if case is Case.NEGATION:
            return cert.f_k.degree == 4 * k
        if case is Case.MULTIPLICATIVE:
            return cert.f_k.degree == k * k - 1
        u, ell = case_iii_parameters(cert.g)
        return cert.f_k.degree == 4 * k + abs(ell) - 1 and cert.f_k.degree % 4 == 0

    check("f_k degree", degree_ok)
    if case is not Case.MULTIPLICATIVE:
        check("f_k reciprocal", lambda: is_reciprocal(cert.f_k))
        check("f_k(1) = f_k(-1)", lambda: cert.f_k(1) == cert.f_k(-1))
    if case is Case.PM1:
        check("f_k(+-1) = u", lambda: cert.f_k(1) == case_iii_parameters(cert.g)[0])
    check("truncation agrees below X^(k-1)", lambda: _prefix_matches(f, cert.f_k if case is not Case.MULTIPLICATIVE else cert.g, k))

    check("B matches case", lambda: rc.B == coefficient_bound(cs, case))
    check("r = |alpha| + R", lambda: math.isclose(rc.r, abs(cert.alpha) + rc.R, rel_tol=1e-15, abs_tol=0))
    check("R <= epsilon", lambda: 0 < rc.R <= cert.epsilon)
    check("R <= (1 - |alpha|)/2", lambda: rc.R <= (1 - abs(cert.alpha)) / 2)
    check("Rouche inequality", lambda: rc.B * rc.r ** (k - 1) / (1 - rc.r) < rc.m)
    check("k from Rouche bound", lambda: rc.k == k)
    check("beta in open disk", lambda: abs(cert.beta) < 1)
    check("achieved_error = |alpha - beta|", lambda: cert.achieved_error == abs(cert.alpha - cert.beta))
    check("achieved_error < epsilon", lambda: cert.achieved_error < cert.epsilon)
    check("achieved_error < R", lambda: cert.achieved_error < rc.R)
    target = cert.g if case is Case.MULTIPLICATIVE else cert.f_k
    check("beta is a zero of f_k", lambda: scaled_residual(target, cert.beta) < ACCEPT_RESIDUAL)
    check("disc is square", lambda: cert.disc.is_square)
    if case is not Case.MULTIPLICATIVE:
        check("criterion agrees", lambda: reciprocal_square_criterion(cert.f_k) == cert.disc.is_square)
    check("in_A_n flag", lambda: cert.in_A_n == (cert.disc.is_square and not cert.disc.is_zero))
    check("in_wreath flag", lambda: cert.in_wreath == is_reciprocal(cert.f_k))

    if recompute:
        roots = find_all_roots(f).roots

        def alpha_is_root():
            return nearest_root(roots, cert.alpha)[1] <= ROOT_MATCH

        def isolation():
            in_disk = [z for z in roots if abs(z) <= 1]
            cap = min(cert.epsilon, (1 - abs(cert.alpha)) / 2)
            return isolation_radius(in_disk, cert.alpha, cap) == rc.R

        check("alpha is a zero of the source", alpha_is_root)
        check("R is the isolation radius", isolation)
        check("m recertified", lambda: min_modulus_on_circle(f, cert.alpha, rc.R, rc.samples) >= rc.m > 0)
        check(
            "a zero of f_k within R",
            lambda: nearest_root(_candidate_roots(case, cert.g, cert.f_k), cert.alpha)[1] < rc.R,
        )
        check("disc recomputed exactly", lambda: certificate_discriminant(case, cert.g, k, cert.f_k) == cert.disc)
    return out


def _prefix_matches(f: IntPolynomial, p: IntPolynomial, k: int) -> bool:
    from .constructions import series_coefficients

    return series_coefficients(f, k - 1) == [p[j] for j in range(k - 1)]


# --- serialization ----------------------------------------------------------


def _fmt_float(x: float) -> str:
    return repr(float(x))


def to_text(cert: ApproxCertificate) -> str:
    rc = cert.rouche
    fields = [
        ("format", FORMAT),
        ("source", cert.source.format()),
        ("coeff_set", cert.coeff_set.format()),
        ("inverted", str(cert.inverted).lower()),
        ("alpha_re", _fmt_float(cert.alpha.real)),
        ("alpha_im", _fmt_float(cert.alpha.imag)),
        ("epsilon", _fmt_float(cert.epsilon)),
        ("case_used", cert.case_used.value),
        ("k", str(cert.k)),
        ("g", cert.g.format()),
        ("f_k", cert.f_k.format()),
        ("beta_re", _fmt_float(cert.beta.real)),
        ("beta_im", _fmt_float(cert.beta.imag)),
        ("achieved_error", _fmt_float(cert.achieved_error)),
        ("rouche_R", _fmt_float(rc.R)),
        ("rouche_m", _fmt_float(rc.m)),
        ("rouche_B", str(rc.B)),
        ("rouche_r", _fmt_float(rc.r)),
        ("rouche_samples", str(rc.samples)),
        ("disc", str(cert.disc.value)),
        ("disc_is_square", str(cert.disc.is_square).lower()),
        ("disc_is_zero", str(cert.disc.is_zero).lower()),
        ("galois_in_A_n", str(cert.in_A_n).lower()),
        ("galois_in_wreath", str(cert.in_wreath).lower()),
    ]
    if cert.inverted:
        orig_a, orig_b = 1 / cert.alpha, 1 / cert.beta
        fields += [
            ("source_root_re", _fmt_float(orig_a.real)),
            ("source_root_im", _fmt_float(orig_a.imag)),
            ("source_beta_re", _fmt_float(orig_b.real)),
            ("source_beta_im", _fmt_float(orig_b.imag)),
        ]
    return "".join(f"{key} = {value}\n" for key, value in fields)


def parse_document(text: str) -> dict[str, str]:
    doc = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        doc[key.strip()] = value.strip()
    return doc


def _bool(s: str) -> bool:
    if s not in ("true", "false"):
        raise ValueError(f"bad boolean {s!r}")
    return s == "true"


def from_text(text: str) -> tuple[ApproxCertificate, dict[str, str]]:
    """Parse a certificate; returns it with the raw fields for flag checks."""
    doc = parse_document(text)
    if doc.get("format") != FORMAT:
        raise ValueError("not a certificate document")
    cs = classify_coeff_set(int(x) for x in doc["coeff_set"].split(","))
    k = int(doc["k"])
    rc = TruncationChoice(
        k=k,
        R=float(doc["rouche_R"]),
        m=float(doc["rouche_m"]),
        B=int(doc["rouche_B"]),
        r=float(doc["rouche_r"]),
        samples=int(doc["rouche_samples"]),
    )
    cert = ApproxCertificate(
        source=IntPolynomial.parse(doc["source"]),
        coeff_set=cs,
        inverted=_bool(doc["inverted"]),
        alpha=complex(float(doc["alpha_re"]), float(doc["alpha_im"])),
        epsilon=float(doc["epsilon"]),
        case_used=Case(doc["case_used"]),
        k=k,
        g=IntPolynomial.parse(doc["g"]),
        f_k=IntPolynomial.parse(doc["f_k"]),
        beta=complex(float(doc["beta_re"]), float(doc["beta_im"])),
        achieved_error=float(doc["achieved_error"]),
        rouche=rc,
        disc=DiscriminantValue(Fraction(doc["disc"])),
    )
    return cert, doc


def verify_text(text: str) -> list[tuple[str, bool]]:
    """Re-check a serialized certificate, including its recorded flags."""
    try:
        cert, doc = from_text(text)
    except Exception:
        return [("parse", False)]
    results = check_certificate(cert, recompute=True)
    flag_checks = [
        ("disc_is_square", cert.disc.is_square),
        ("disc_is_zero", cert.disc.is_zero),
        ("galois_in_A_n", cert.in_A_n),
        ("galois_in_wreath", cert.in_wreath),
    ]
    for key, actual in flag_checks:
        try:
            ok = _bool(doc[key]) == actual
        except Exception:
            ok = False
        results.append((f"recorded {key}", ok))
    return results
