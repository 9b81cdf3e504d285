"""
Segmented sieve of Eratosthenes.

Memory is one numpy bitmap of ``QPRAT_SIEVE_SEGMENT`` bytes plus the base primes
up to sqrt(hi), independent of hi - lo.
"""
import math
from typing import Iterator

import numpy as np

from src.config.configs import QPRAT_SIEVE_SEGMENT


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


def primes_in_range(lo: int, hi: int, segment: int = QPRAT_SIEVE_SEGMENT) -> Iterator[int]:
    """Yield the primes in [lo, hi] in ascending order; empty when lo > hi."""
    lo = max(lo, 2)
    if lo > hi:
        return
    base = simple_sieve(math.isqrt(hi))

    for start in range(lo, hi + 1, segment):
        end = min(start + segment, hi + 1)
        mark = np.ones(end - start, dtype=bool)
        for q in base:
            q = int(q)
            if q * q >= end:
                break
            first = max(q * q, -(-start // q) * q)
            if first < end:
                mark[first - start :: q] = False
        for offset in np.nonzero(mark)[0]:
            yield start + int(offset)


def prime_count(lo: int, hi: int) -> int:
    return sum(1 for _ in primes_in_range(lo, hi))
