"""
Generalized Fibonacci sequences F^(a,b): F_0 = 0, F_1 = 1, F_{n+2} = a F_{n+1} - b F_n.

The n-th power of the companion matrix M = [[a, -b], [1, 0]] is
[[F_{n+1}, -b F_n], [F_n, F_{n+1} - a F_n]], so the pair (F_n, F_{n+1}) determines
it and M^k = I (mod m) exactly when (F_k, F_{k+1}) = (0, 1) (mod m).
"""
import math
from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from src.arith.factor import factorize
from src.arith.residue import Residue, inv_mod, kronecker, multiplicative_order
from src.config.configs import QPRAT_ITER_CAP, QPRAT_PERIOD_MODULUS_CAP
from src.field.quadfield import QuadraticField
from src.utlis.errors import (
    ExcludedPrimeError,
    InconsistencyError,
    InvalidArgumentError,
    OracleLimitError,
)


class FibParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    b: Literal[1, -1]

    @property
    def disc(self) -> int:
        return self.a * self.a - 4 * self.b

    @model_validator(mode="after")
    def _positive_disc(self):
        if self.disc <= 0:
            raise ValueError(f"a^2 - 4b must be positive, got {self.disc}")
        return self

    @classmethod
    def from_field(cls, field: QuadraticField) -> "FibParams":
        return cls(a=field.trace_a, b=field.norm_b)


@dataclass(frozen=True, slots=True)
class FibPair:
    f_n: Residue
    f_n1: Residue
    n: int

    @property
    def is_identity(self) -> bool:
        """M^n = I, i.e. (F_n, F_{n+1}) = (0, 1)."""
        return self.f_n.value == 0 and self.f_n1.value == 1 % self.f_n1.modulus


class PeriodRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    modulus: int
    z: int
    k: int

    @model_validator(mode="after")
    def _rank_divides_period(self):
        if self.z < 1 or self.k % self.z:
            raise ValueError(f"rank {self.z} must divide period {self.k}")
        return self


def _pair(a: int, b: int, n: int, m: int):
    """(F_n, F_{n+1}) mod m by left-to-right squaring of the companion matrix."""
    a %= m
    f, g = 0, 1 % m
    for bit in bin(n)[2:]:
        # M^k -> M^{2k}
        f, g = f * (2 * g - a * f) % m, (g * g - b * f * f) % m
        if bit == "1":
            # M^{2k} -> M^{2k+1}
            f, g = g, (a * g - b * f) % m
    return f, g


def fib_pair(params: FibParams, n: int, m: int) -> FibPair:
    if m < 2:
        raise InvalidArgumentError(f"modulus must be >= 2, got {m}")
    if n < 0:
        raise InvalidArgumentError(f"index must be non-negative, got {n}")
    f, g = _pair(params.a, params.b, n, m)
    return FibPair(Residue(f, m), Residue(g, m), n)


def fib_iter_oracle(params: FibParams, n: int, m: int) -> FibPair:
    """Term-by-term recursion; test oracle only."""
    if n > QPRAT_ITER_CAP:
        raise OracleLimitError(f"linear recursion refused for n={n} > {QPRAT_ITER_CAP}")
    if m < 2:
        raise InvalidArgumentError(f"modulus must be >= 2, got {m}")
    a, b = params.a % m, params.b
    f, g = 0, 1 % m
    for _ in range(n):
        f, g = g, (a * g - b * f) % m
    return FibPair(Residue(f, m), Residue(g, m), n)


def _check_prime_not_degenerate(params: FibParams, p: int) -> None:
    if p == 2 or params.disc % p == 0:
        raise ExcludedPrimeError(params.disc, p, "2*b*disc", "degenerate prime for the sequence")


def _strip_to_least(params: FibParams, n: int, m: int) -> int:
    """Least z | n with F_z = 0 (mod m), given F_n = 0; zeros of F are the multiples of z."""
    z = n
    for prime, _ in factorize(n):
        while z % prime == 0 and _pair(params.a, params.b, z // prime, m)[0] == 0:
            z //= prime
    return z


def rank_of_apparition(params: FibParams, p: int, eps: int) -> int:
    _check_prime_not_degenerate(params, p)
    n = p - eps
    if _pair(params.a, params.b, n, p)[0] != 0:
        raise InconsistencyError(f"F_{n} != 0 (mod {p}) for a={params.a}, b={params.b}")
    return _strip_to_least(params, n, p)


def wall_period(params: FibParams, p: int, eps: int) -> PeriodRecord:
    """
    k(p) = z * lcm(ord F_{z+1}, ord b^z F_{z+1}^{-1}): M^z is diagonal with those
    two entries, and both lie in F_p^* so p - 1 bounds their orders.
    """
    z = rank_of_apparition(params, p, eps)
    _, lam1 = _pair(params.a, params.b, z, p)
    lam2 = pow(params.b, z, p) * inv_mod(lam1, p) % p
    bound = factorize(p - 1)
    o1 = multiplicative_order(Residue(lam1, p), bound)
    o2 = multiplicative_order(Residue(lam2, p), bound)
    k = z * (o1 * o2 // math.gcd(o1, o2))
    if not fib_pair(params, k, p).is_identity:
        raise InconsistencyError(f"period verification failed: k={k}, p={p}, a={params.a}, b={params.b}")
    return PeriodRecord(modulus=p, z=z, k=k)


def wall_period_square(params: FibParams, p: int, k_p: int) -> int:
    if fib_pair(params, k_p, p * p).is_identity:
        return k_p
    return p * k_p


def period_linear(params: FibParams, m: int) -> PeriodRecord:
    """Rank and period of F mod an arbitrary m by direct iteration."""
    if m < 2:
        raise InvalidArgumentError(f"modulus must be >= 2, got {m}")
    if m > QPRAT_PERIOD_MODULUS_CAP:
        raise OracleLimitError(f"linear period search refused for m={m} > {QPRAT_PERIOD_MODULUS_CAP}")
    a, b = params.a % m, params.b
    f, g = 0, 1 % m
    z = 0
    # the period is at most m^2 for any unit b
    for t in range(1, m * m + 1):
        f, g = g, (a * g - b * f) % m
        if f == 0:
            if not z:
                z = t
            if g == 1 % m:
                return PeriodRecord(modulus=m, z=z, k=t)
    raise InconsistencyError(f"no period found modulo {m}")


def is_fibonacci_wieferich(field: QuadraticField, p: int) -> bool:
    if p == 2:
        raise ExcludedPrimeError(field.d, p, "2", "prime is two")
    if field.d % p == 0 or field.unit.v % p == 0:
        raise ExcludedPrimeError(field.d, p, "(eps - conj eps)^2", "p divides d*v^2")
    eps = kronecker(field.d, p)
    return _pair(field.trace_a, field.norm_b, p - eps, p * p)[0] == 0


def rank_fact_residue(field: QuadraticField, p: int) -> int:
    """F_{p-(d/p)} mod p^2; the rank fact says it is divisible by p."""
    eps = kronecker(field.d, p)
    return _pair(field.trace_a, field.norm_b, p - eps, p * p)[0]
