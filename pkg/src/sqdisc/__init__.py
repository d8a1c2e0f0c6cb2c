"""Exact discriminants, square-discriminant constructions with constrained
coefficients, Rouche-certified root approximation, and zero-set rendering."""

from .poly import DomainError, IntPolynomial
from .discriminant import DiscriminantValue, discriminant, is_square_rational
from .resultant import resultant
from .constructions import Case, CoeffSet, classify_coeff_set
from .certificate import ApproxCertificate, approximate_square_disc

__all__ = [
    "ApproxCertificate",
    "Case",
    "CoeffSet",
    "DiscriminantValue",
    "DomainError",
    "IntPolynomial",
    "approximate_square_disc",
    "classify_coeff_set",
    "discriminant",
    "is_square_rational",
    "resultant",
]
