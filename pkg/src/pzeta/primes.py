"""Prime tables, the Moebius function and the half-step prime counting function."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError, RangeError

MAX_LIMIT = 10**9
SEGMENT_THRESHOLD = 10**7
SEGMENT_SIZE = 1 << 20


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, ascending. The array is read-only."""

    limit: int
    primes: np.ndarray

    def __len__(self) -> int:
        return len(self.primes)

    def count_le(self, x: float) -> int:
        """Number of primes p <= x."""
        return int(np.searchsorted(self.primes, x, side="right"))

    def count_lt(self, x: float) -> int:
        """Number of primes p < x."""
        return int(np.searchsorted(self.primes, x, side="left"))

    def up_to(self, x: float) -> np.ndarray:
        return self.primes[: self.count_le(x)]


@dataclass(frozen=True)
class MobiusTable:
    """mu(n) for 1 <= n <= limit; ``mu[0]`` is an unused 0 placeholder."""

    limit: int
    mu: np.ndarray

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise RangeError(f"n={n} outside 1..{self.limit}")
        return int(self.mu[n])


def _check_limit(limit: int, lowest: int) -> int:
    limit = int(limit)
    if limit < lowest:
        raise DomainError(f"limit must be >= {lowest}, got {limit}")
    if limit > MAX_LIMIT:
        raise CapacityError(f"limit {limit} exceeds ceiling {MAX_LIMIT}")
    return limit


def _simple_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


def _segmented_sieve(limit: int) -> np.ndarray:
    base = _simple_sieve(math.isqrt(limit))
    chunks = [base]
    lo = int(base[-1]) + 1
    while lo <= limit:
        hi = min(lo + SEGMENT_SIZE, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            seg[start - lo :: p] = False
        chunks.append(np.flatnonzero(seg).astype(np.int64) + lo)
        lo = hi
    return np.concatenate(chunks)


def sieve(limit: int) -> PrimeTable:
    """Primes <= limit by the sieve of Eratosthenes.

    Above ``SEGMENT_THRESHOLD`` the sieve runs over blocks of
    ``SEGMENT_SIZE`` integers so memory stays bounded.
    """
    limit = _check_limit(limit, 2)
    primes = _simple_sieve(limit) if limit <= SEGMENT_THRESHOLD else _segmented_sieve(limit)
    return PrimeTable(limit, _frozen(primes))


def mobius_sieve(limit: int) -> MobiusTable:
    """Moebius function for every n <= limit."""
    limit = _check_limit(limit, 1)
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    if limit >= 2:
        for p in _simple_sieve(limit):
            p = int(p)
            mu[p::p] *= -1
            if p * p <= limit:
                mu[p * p :: p * p] = 0
    return MobiusTable(limit, _frozen(mu))


def prime_count(x: float, table: PrimeTable) -> float:
    """pi(x) with the half-step convention: at a prime it returns count - 1/2.

    >>> t = sieve(100)
    >>> prime_count(10, t), prime_count(3, t), prime_count(2.5, t)
    (4.0, 1.5, 1.0)
    """
    x = float(x)
    if not x > 0:
        raise DomainError(f"prime_count needs x > 0, got {x}")
    if x > table.limit:
        raise RangeError(f"x={x:g} exceeds table limit {table.limit}")
    return 0.5 * (table.count_lt(x) + table.count_le(x))
