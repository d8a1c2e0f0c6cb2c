"""Exact resultants of integer polynomials.

Convention: ``Res(f, g)`` is the determinant of the Sylvester matrix with the
rows of ``f`` first, i.e. ``lc(f)^deg(g) * prod g(alpha)`` over the roots of
``f``. For a constant argument ``Res(c, g) = c^deg(g)`` and
``Res(f, c) = c^deg(f)``.

Two exact routes are provided. :func:`subresultant_prs` works over the
integers directly and is fast for small degrees. :func:`modular_resultant`
computes the value modulo enough word-size primes to cover the Hadamard bound
and recombines by CRT; it is vectorised over the primes with numpy and is the
route used for the degree-hundreds polynomials that certificates produce.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .poly import DomainError, IntPolynomial

MODULAR_THRESHOLD = 48


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    if f.degree + g.degree < MODULAR_THRESHOLD:
        return subresultant_prs(f, g)
    return modular_resultant(f, g)


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b``; lists are
    highest coefficient first."""
    a = list(a)
    lb = b[0]
    e = len(a) - len(b) + 1
    for i in range(e):
        la = a[i]
        for j in range(i, len(a)):
            a[j] *= lb
        if la:
            for j, y in enumerate(b):
                a[i + j] -= la * y
    r = a[e:]
    while r and r[0] == 0:
        r.pop(0)
    return r


def subresultant_prs(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant by the subresultant pseudo-remainder sequence."""
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    da, db = f.degree, g.degree
    if da == 0:
        return f.lc**db
    if db == 0:
        return g.lc**da
    ca, cb = f.content(), g.content()
    A = [x // ca for x in reversed(f.coeffs)]
    B = [x // cb for x in reversed(g.coeffs)]
    t = ca**db * cb**da
    s = 1
    if da < db:
        A, B = B, A
        if da % 2 and db % 2:
            s = -1
    gg, h = 1, 1
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        div = gg * h**delta
        B = [x // div for x in R]
        gg = A[0]
        if delta == 0:
            pass
        else:
            h = gg**delta // h ** (delta - 1)
        if len(B) == 1:
            dA = len(A) - 1
            h = B[0] ** dA // h ** (dA - 1) if dA >= 1 else 1
            return s * t * h


# --- multimodular route -----------------------------------------------------


@lru_cache(maxsize=1)
def _prime_pool() -> tuple[int, ...]:
    """Primes just below 2^31, descending, enough for very large bounds."""
    limit = 1 << 31
    span = 2_000_000
    lo = limit - span
    sieve = np.ones(span, dtype=bool)
    for p in range(2, math.isqrt(limit) + 1):
        # small primes only need trial marking; p itself is far below lo
        start = (-lo) % p
        sieve[start::p] = False
    primes = (lo + np.nonzero(sieve)[0]).tolist()
    return tuple(reversed(primes))


def _hadamard_bits(f: IntPolynomial, g: IntPolynomial) -> int:
    nf = math.log2(max(1, sum(a * a for a in f.coeffs))) / 2
    ng = math.log2(max(1, sum(a * a for a in g.coeffs))) / 2
    return int(math.ceil(g.degree * nf + f.degree * ng)) + 2


def _powmod_vec(base: np.ndarray, exp: np.ndarray, p: np.ndarray) -> np.ndarray:
    result = np.ones_like(base)
    base = base % p
    exp = exp.copy()
    while np.any(exp):
        odd = (exp & 1).astype(bool)
        result = np.where(odd, (result * base) % p, result)
        base = (base * base) % p
        exp >>= 1
    return result


def _res_mod_primes(f: IntPolynomial, g: IntPolynomial, primes: np.ndarray):
    """Res(f, g) modulo each prime; returns (values, usable-mask).

    Rows are coefficients (highest first), columns are primes. A prime whose
    remainder degrees deviate from the common schedule is dropped; the
    computation is still exact for every kept prime.
    """
    P = primes[None, :]
    A = np.array([[c % int(p) for p in primes] for c in reversed(f.coeffs)], dtype=np.int64)
    B = np.array([[c % int(p) for p in primes] for c in reversed(g.coeffs)], dtype=np.int64)
    keep = (A[0] != 0) & (B[0] != 0)
    res = np.ones(len(primes), dtype=np.int64)
    a, b = A.shape[0] - 1, B.shape[0] - 1
    if a < b:
        A, B, a, b = B, A, b, a
        if a % 2 and b % 2:
            res = (-res) % primes
    while True:
        if b == 0:
            res = res * _powmod_vec(B[0], np.full(len(primes), a, dtype=np.int64), primes) % primes
            return res, keep
        inv = _powmod_vec(B[0], primes - 2, primes)
        A = A.copy()
        for i in range(a - b + 1):
            q = A[i] * inv % primes
            # |A - q*B| < 2^62, so a single reduction suffices
            blk = A[i : i + b + 1]
            blk -= q[None, :] * B
            blk %= P
        R = A[a - b + 1 :]
        nz = R != 0
        anynz = nz.any(axis=1)
        if not anynz.any():
            return np.zeros(len(primes), dtype=np.int64), keep
        top = int(np.argmax(anynz))
        R = R[top:]
        keep &= R[0] != 0
        r = R.shape[0] - 1
        sign = -1 if (a % 2 and b % 2) else 1
        lcpow = _powmod_vec(B[0], np.full(len(primes), a - r, dtype=np.int64), primes)
        res = res * lcpow % primes
        if sign < 0:
            res = (-res) % primes
        A, B, a, b = B, R, b, r


def modular_resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant by multimodular evaluation and CRT, exact."""
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    if f.degree == 0:
        return f.lc**g.degree
    if g.degree == 0:
        return g.lc**f.degree
    need = _hadamard_bits(f, g) + 1  # sign
    pool = _prime_pool()
    start = 0
    residues: list[tuple[int, int]] = []
    have = 0.0
    while have < need:
        count = max(8, int((need - have) / 30.9) + 4)
        if start + count > len(pool):
            raise RuntimeError("prime pool exhausted")
        primes = np.array(pool[start : start + count], dtype=np.int64)
        start += count
        vals, keep = _res_mod_primes(f, g, primes)
        for p, v, k in zip(primes.tolist(), vals.tolist(), keep.tolist()):
            if k:
                residues.append((p, v))
                have += math.log2(p)
    return _crt_symmetric(residues)


def _crt_symmetric(residues: list[tuple[int, int]]) -> int:
    # product tree keeps the big-int work near-linear
    items = [(v, p) for p, v in residues]
    while len(items) > 1:
        nxt = []
        for i in range(0, len(items) - 1, 2):
            (r1, m1), (r2, m2) = items[i], items[i + 1]
            t = (r2 - r1) * pow(m1, -1, m2) % m2
            nxt.append((r1 + m1 * t, m1 * m2))
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    r, m = items[0]
    r %= m
    return r - m if r > m // 2 else r
