"""
Segmented sieves over integer windows: primes, exact totients, factorizations.

All arithmetic is exact int64 / Python int; no floating point enters any
totient or factor value.  Window computations are pure functions of
(Window, BasePrimes) and safe to run on any number of workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

MAX_VALUE = 1 << 40          # largest integer any window may contain
MAX_BASE_LIMIT = 1 << 21     # base primes cover sqrt of anything below 2^42
DEFAULT_WINDOW_SIZE = 1 << 22


@dataclass(frozen=True)
class Window:
    """Contiguous inclusive integer interval [lo, hi]."""

    lo: int
    hi: int
    max_size: int = field(default=DEFAULT_WINDOW_SIZE, compare=False)

    def __post_init__(self) -> None:
        if not (1 <= self.lo <= self.hi <= MAX_VALUE):
            raise ValueError(f"window [{self.lo}, {self.hi}] out of supported range")
        if self.hi - self.lo + 1 > self.max_size:
            raise ValueError(
                f"window size {self.hi - self.lo + 1} exceeds configured max {self.max_size}"
            )

    def __len__(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class BasePrimes:
    """All primes up to ``limit``, ascending."""

    limit: int
    primes: np.ndarray

    def covers(self, hi: int) -> bool:
        """True if these primes suffice to factor every n <= hi."""
        return self.limit >= isqrt(hi)


@dataclass(frozen=True)
class FactoredWindow:
    """Exact totients and complete factorizations for every n in a window.

    ``phi[i]`` is phi(window.lo + i); ``factors[i]`` lists (prime, exponent)
    pairs in increasing prime order whose product reconstructs n.
    """

    window: Window
    phi: np.ndarray
    factors: list[list[tuple[int, int]]]

    def values(self) -> np.ndarray:
        return np.arange(self.window.lo, self.window.hi + 1, dtype=np.int64)


def base_primes(limit: int) -> BasePrimes:
    """
    Sieve all primes <= limit.

    Parameters
    ----------
    limit : int
        Inclusive bound, 2 <= limit <= 2^21.

    Returns
    -------
    BasePrimes
        Ascending int64 array of every prime <= limit.
    """
    if not (2 <= limit <= MAX_BASE_LIMIT):
        raise ValueError(f"base prime limit {limit} not in [2, {MAX_BASE_LIMIT}]")
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p:: p] = False
    return BasePrimes(limit=limit, primes=np.flatnonzero(is_p).astype(np.int64))


def _require_coverage(base: BasePrimes, hi: int) -> None:
    if not base.covers(hi):
        raise ValueError(
            f"base primes up to {base.limit} cannot factor values up to {hi} "
            f"(need limit >= {isqrt(hi)})"
        )


def phi_window(w: Window, base: BasePrimes) -> np.ndarray:
    """
    Exact phi(n) for every n in the window, as int64.

    Strategy: start each slot at n, apply phi *= (1 - 1/q) once per base
    prime q | n via strided slices, strip prime powers from a residue copy,
    and fold in the surviving large-prime cofactor.  n is prime exactly when
    phi(n) == n - 1 (n >= 2).
    """
    phi, rem = _phi_and_residue(w, base)
    big = rem > 1
    phi[big] -= phi[big] // rem[big]
    return phi


def _phi_and_residue(w: Window, base: BasePrimes) -> tuple[np.ndarray, np.ndarray]:
    """phi with all base-prime contributions applied, plus unstripped cofactors."""
    _require_coverage(base, w.hi)
    lo, hi = w.lo, w.hi
    n = np.arange(lo, hi + 1, dtype=np.int64)
    phi = n.copy()
    rem = n  # n is not needed again; reuse it as the strip buffer
    root = isqrt(hi)
    for q in base.primes:
        q = int(q)
        if q > root:
            break
        sl = slice((-lo) % q, None, q)
        phi[sl] -= phi[sl] // q  # exact: q still divides phi here
        qe = q
        while qe <= hi:
            rem[(-lo) % qe:: qe] //= q
            qe *= q
    return phi, rem


def factor_window(w: Window, base: BasePrimes) -> FactoredWindow:
    """
    Fully factor every n in the window and compute exact phi.

    After stripping all base primes <= sqrt(hi), any cofactor > 1 is itself
    prime (it would otherwise have a factor <= sqrt(hi)) and is recorded
    with exponent 1.
    """
    _require_coverage(base, w.hi)
    lo, hi = w.lo, w.hi
    size = hi - lo + 1
    factors: list[list[tuple[int, int]]] = [[] for _ in range(size)]
    phi, rem = _phi_and_residue(w, base)
    root = isqrt(hi)
    for q in base.primes:
        q = int(q)
        if q > root:
            break
        for i in range(((-lo) % q), size, q):
            m = (lo + i) // q
            e = 1
            while m % q == 0:
                e += 1
                m //= q
            factors[i].append((q, e))
    big = rem > 1
    phi[big] -= phi[big] // rem[big]
    for i in np.flatnonzero(big):
        factors[i].append((int(rem[i]), 1))
    return FactoredWindow(window=w, phi=phi, factors=factors)


def primes_in(w: Window, base: BasePrimes) -> np.ndarray:
    """All primes in [w.lo, w.hi], ascending, via a boolean segmented sieve."""
    _require_coverage(base, w.hi)
    lo, hi = w.lo, w.hi
    is_p = np.ones(hi - lo + 1, dtype=bool)
    if lo == 1:
        is_p[0] = False
    root = isqrt(hi)
    for q in base.primes:
        q = int(q)
        if q > root:
            break
        start = max(q * q, lo + ((-lo) % q))
        is_p[start - lo:: q] = False
    return (np.flatnonzero(is_p) + lo).astype(np.int64)


def phi_naive(n: int) -> int:
    """
    phi(n) by trial division; the independent oracle for all sieve output.

    Valid for 1 <= n <= 2^62.  phi(1) = 1 by convention.
    """
    if n == 0:
        raise ValueError("phi(0) is undefined")
    if not (1 <= n <= 1 << 62):
        raise ValueError(f"phi_naive argument {n} out of range")
    result = n
    m = n
    if m % 2 == 0:
        result -= result // 2
        while m % 2 == 0:
            m //= 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            result -= result // d
            while m % d == 0:
                m //= d
        d += 2
    if m > 1:
        result -= result // m
    return result


def factor_naive(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: list[tuple[int, int]] = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                e += 1
                m //= d
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


# Deterministic Miller-Rabin below 2^64 with the 12 smallest prime bases.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 1 << 64


def is_prime64(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2^64."""
    if n >= _MR_LIMIT:
        raise ValueError("is_prime64 requires n < 2^64")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
