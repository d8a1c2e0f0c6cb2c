"""Numerical complex roots by Aberth-Ehrlich simultaneous iteration.

The kernel works on a batch of polynomials of one degree at a time, so the
atlas can push thousands of small polynomials through a single numpy loop.
Evaluation switches to the reversed polynomial at ``1/z`` when ``|z| > 1``,
which keeps degree-thousands inputs free of overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .poly import DomainError, IntPolynomial

EPS = np.finfo(float).eps
ACCEPT_RESIDUAL = 1e-10
CLUSTER_THRESHOLD = 1e-8
MAX_ITER = 1000


class RootFindingError(RuntimeError):
    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    source_degree: int
    multiplicities: tuple[int, ...] = ()

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def array(self) -> np.ndarray:
        return np.array(self.roots, dtype=complex)


def _eval_ratio(C: np.ndarray, z: np.ndarray):
    """Newton ratio f/f' and scaled residual |f| / sum|a_i||z|^i.

    ``C`` is (B, n+1), constant term first; ``z`` is (B, n).
    """
    n = C.shape[1] - 1
    inside = np.abs(z) <= 1.0
    w = np.where(inside, z, 1.0 / np.where(inside, 1.0, z))
    aw = np.abs(w)
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    s = np.zeros(z.shape)
    q = np.zeros_like(z)
    dq = np.zeros_like(z)
    Cc = C.astype(complex)
    Ca = np.abs(C).astype(float)
    for i in range(n, -1, -1):
        # forward Horner for |z| <= 1
        dp = dp * w + p
        p = p * w + Cc[:, i : i + 1]
    # reversed polynomial evaluated at w = 1/z for |z| > 1
    for i in range(0, n + 1):
        dq = dq * w + q
        q = q * w + Cc[:, i : i + 1]
    for i in range(n, -1, -1):
        s = s * aw + np.where(inside, Ca[:, i : i + 1], Ca[:, n - i : n - i + 1])
    val = np.where(inside, p, q)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio_in = p / dp
        ratio_out = q / (w * (n * q - w * dq))
        ratio = np.where(inside, ratio_in, ratio_out)
        resid = np.abs(val) / s
    return ratio, resid


def _initial_points(C: np.ndarray) -> np.ndarray:
    B, m = C.shape
    n = m - 1
    a = np.abs(C).astype(float)
    lead = a[:, -1:]
    const = a[:, :1]
    # Fujiwara-style upper and lower bounds on the root moduli
    k = np.arange(1, n + 1)
    with np.errstate(divide="ignore"):
        up = 2 * np.max((a[:, n - k] / lead) ** (1.0 / k), axis=1)
        lo = 0.5 / np.max((a[:, k] / const) ** (1.0 / k), axis=1)
    rho = (const[:, 0] / lead[:, 0]) ** (1.0 / n)
    rho = np.clip(rho, lo, up)
    j = np.arange(n)
    theta = 2 * np.pi * j / n + 0.4
    # two concentric circles, alternating
    radius = np.where(j % 2 == 0, 0.95, 1.05)
    return (rho[:, None] * radius[None, :]) * np.exp(1j * theta)[None, :]


def aberth_batch(C: np.ndarray, max_iter: int = MAX_ITER):
    """Roots of every row of ``C`` (constant term first, nonzero ends).

    Returns (roots (B, n), residuals (B, n)). Each root is frozen once it
    converges, so a row's trajectory does not depend on the rest of the batch.
    """
    C = np.asarray(C)
    B, m = C.shape
    n = m - 1
    if n == 1:
        z = (-C[:, 0] / C[:, 1]).astype(complex)[:, None]
        _, res = _eval_ratio(C, z)
        return z, res
    z = _initial_points(C)
    active = np.ones(z.shape, dtype=bool)
    eye = np.eye(n, dtype=bool)
    for _ in range(max_iter):
        rows = np.nonzero(active.any(axis=1))[0]
        if rows.size == 0:
            break
        zr = z[rows]
        ratio, resid = _eval_ratio(C[rows], zr)
        diff = zr[:, :, None] - zr[:, None, :]
        diff[:, eye] = 1.0
        inv = 1.0 / diff
        inv[:, eye] = 0.0
        S = inv.sum(axis=2)
        with np.errstate(divide="ignore", invalid="ignore"):
            corr = ratio / (1.0 - ratio * S)
        bad = ~np.isfinite(corr)
        corr = np.where(bad, 0.0, corr)
        act = active[rows]
        done = (np.abs(corr) <= 4 * EPS * np.abs(zr)) | (resid <= 4 * n * EPS) | bad & (resid == 0)
        step = np.where(act, corr, 0.0)
        z[rows] = zr - step
        active[rows] = act & ~done
    _, resid = _eval_ratio(C, z)
    # one Newton polish, kept only where it lowers the residual
    ratio, _ = _eval_ratio(C, z)
    ratio = np.where(np.isfinite(ratio), ratio, 0.0)
    zn = z - ratio
    _, resid_n = _eval_ratio(C, zn)
    better = resid_n < resid
    z = np.where(better, zn, z)
    resid = np.where(better, resid_n, resid)
    return z, resid


def _canonical_order(z: np.ndarray) -> np.ndarray:
    return np.lexsort((z.imag, z.real))


def _multiplicities(z: np.ndarray) -> tuple[int, ...]:
    d = np.abs(z[:, None] - z[None, :])
    return tuple(int(c) for c in (d <= CLUSTER_THRESHOLD).sum(axis=1))


def find_all_roots(f: IntPolynomial, max_iter: int = MAX_ITER) -> RootSet:
    """All ``deg f`` complex roots with multiplicity, sorted by (re, im)."""
    if f.degree < 1:
        raise DomainError("find_all_roots needs deg f >= 1")
    coeffs = list(f.coeffs)
    zeros = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1
    roots = np.zeros(zeros, dtype=complex)
    resid = np.zeros(zeros)
    if len(coeffs) > 1:
        C = np.array([coeffs], dtype=float)
        if max(abs(c) for c in coeffs) >= 2**53:
            raise DomainError("coefficients too large for double precision")
        z, r = aberth_batch(C, max_iter)
        roots = np.concatenate([roots, z[0]])
        resid = np.concatenate([resid, r[0]])
    order = _canonical_order(roots)
    roots, resid = roots[order], resid[order]
    rs = RootSet(
        tuple(complex(x) for x in roots),
        tuple(float(x) for x in resid),
        f.degree,
        _multiplicities(roots),
    )
    if not np.all(resid < ACCEPT_RESIDUAL):
        raise RootFindingError(f"no convergence for degree {f.degree}", partial=rs)
    return rs


def nearest_root(roots, target: complex) -> tuple[complex, float]:
    """Nearest root; ties go to the lexicographically smaller (re, im)."""
    roots = list(roots)
    if not roots:
        raise DomainError("empty root set")
    best = min(roots, key=lambda z: (abs(z - target), z.real, z.imag))
    return best, abs(best - target)


def isolation_radius(roots, alpha: complex, cap: float) -> float:
    """min(cap, half the distance from ``alpha`` to the nearest distinct root)."""
    dists = [abs(z - alpha) for z in roots]
    others = [d for d in dists if d > CLUSTER_THRESHOLD]
    if not others:
        return cap
    return min(cap, min(others) / 2)


def eval_series_quotient(f: IntPolynomial, z: np.ndarray) -> np.ndarray:
    """``F(z) = f(z) / (1 - z^(n+1))`` for ``|z| < 1``."""
    n = f.degree
    acc = np.zeros_like(z, dtype=complex)
    for a in reversed(f.coeffs):
        acc = acc * z + a
    return acc / (1.0 - z ** (n + 1))


def _raw_certified(f: IntPolynomial, center: complex, radius: float, samples: int) -> float:
    theta = 2 * np.pi * np.arange(samples) / samples
    z = center + radius * np.exp(1j * theta)
    vals = np.abs(eval_series_quotient(f, z))
    H = max(abs(a) for a in f.coeffs)
    r = abs(center) + radius
    lip = H / (1.0 - r) ** 2
    return float(vals.min() - lip * math.pi * radius / samples)


def min_modulus_on_circle(f: IntPolynomial, center: complex, radius: float, samples: int = 4096) -> float:
    """Certified lower bound for ``|F|`` on ``|z - center| = radius``.

    The samples are nested dyadic grids, each certified by subtracting a
    Lipschitz slack from the sampled minimum (``|F'| <= H/(1-r)^2`` on
    ``|z| <= r``); the best grid is returned, so more samples never lower
    the bound. Returns 0.0 when nothing positive can be certified.
    """
    if radius <= 0:
        raise DomainError("radius must be positive")
    if abs(center) + radius >= 1:
        raise DomainError("circle must lie inside the open unit disk")
    best = 0.0
    s = 64
    while True:
        s_eff = min(s, samples)
        best = max(best, _raw_certified(f, center, radius, s_eff))
        if s_eff >= samples:
            break
        s *= 2
    return max(best, 0.0)
