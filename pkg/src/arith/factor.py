"""
Integer factorisation for order finding.

Trial division up to ``QPRAT_TRIAL_BOUND``; cofactors that survive are split by
Pollard-Rho with Brent's cycle detection, seeded from ``QPRAT_RHO_SEED`` so two
runs always produce the same factor tree.
"""
import math
import random
from dataclasses import dataclass
from typing import Iterator, Tuple

from src.config.configs import QPRAT_TRIAL_BOUND, QPRAT_RHO_SEED
from src.utlis.errors import InvalidArgumentError

# deterministic for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MAX_FACTOR_INPUT = 1 << 63


@dataclass(frozen=True, slots=True)
class Factorization:
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous or exponent < 1:
                raise InvalidArgumentError(f"malformed factorization {self.factors}")
            previous = prime

    @property
    def value(self) -> int:
        out = 1
        for prime, exponent in self.factors:
            out *= prime ** exponent
        return out

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
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


def _brent(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of the odd composite n."""
    while True:
        y = rng.randint(1, n - 1)
        c = rng.randint(1, n - 1)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g
        # unlucky polynomial, draw another c


def _split(n: int, rng: random.Random, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, rng, out)
        _split(root, rng, out)
        return
    g = _brent(n, rng)
    _split(g, rng, out)
    _split(n // g, rng, out)


def factorize(n: int) -> Factorization:
    if n < 1 or n > _MAX_FACTOR_INPUT:
        raise InvalidArgumentError(f"factorize expects 1 <= n <= 2^63, got {n}")

    found: dict = {}
    for q in (2, 3):
        while n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q

    q = 5
    step = 2
    while q <= QPRAT_TRIAL_BOUND and q * q <= n:
        while n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step

    if n > 1:
        if q * q > n:
            found[n] = found.get(n, 0) + 1
        else:
            _split(n, random.Random(QPRAT_RHO_SEED), found)

    return Factorization(tuple(sorted(found.items())))
