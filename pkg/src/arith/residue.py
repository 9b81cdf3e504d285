import math
from dataclasses import dataclass

from src.arith.factor import Factorization
from src.utlis.errors import BoundViolationError, InvalidArgumentError, NotInvertibleError


@dataclass(frozen=True, slots=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidArgumentError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    @classmethod
    def of(cls, value: int, modulus: int) -> "Residue":
        return cls(value % modulus, modulus)

    def _check(self, other: "Residue") -> None:
        if other.modulus != self.modulus:
            raise InvalidArgumentError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value * other.value % self.modulus, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.modulus, self.modulus)

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise InvalidArgumentError(f"jacobi needs a positive odd lower argument, got {n}")
    sign = 1
    if n == 1:
        return 1
    while True:
        a %= n
        if a == 0:
            return 0
        # (2|n) = -1 iff n = 3, 5 (mod 8)
        while a & 3 == 0:
            a >>= 2
        if a & 1 == 0:
            a >>= 1
            if n & 7 in (3, 5):
                sign = -sign
        if a == 1:
            return sign
        # reciprocity
        if 3 & a & n == 3:
            sign = -sign
        a, n = n, a


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n); zero whenever gcd(a, n) > 1."""
    if n == 0:
        raise InvalidArgumentError("kronecker symbol is undefined for n = 0")
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        twos = 0
        while n % 2 == 0:
            n //= 2
            twos += 1
        if twos & 1 and a % 8 in (3, 5):
            sign = -sign
    return sign * jacobi(a, n)


def mod_pow(base: Residue, exp: int) -> Residue:
    if exp < 0:
        raise InvalidArgumentError(f"exponent must be non-negative, got {exp}")
    return Residue(pow(base.value, exp, base.modulus), base.modulus)


def inv_mod(value: int, modulus: int) -> int:
    g = math.gcd(value, modulus)
    if g != 1:
        raise NotInvertibleError(value % modulus, modulus, g)
    return pow(value, -1, modulus)


def mod_inv(a: Residue) -> Residue:
    return Residue(inv_mod(a.value, a.modulus), a.modulus)


def multiplicative_order(a: Residue, group_exponent_bound: Factorization) -> int:
    """Least t > 0 with a^t = 1, found by stripping primes off the supplied bound."""
    modulus = a.modulus
    bound = group_exponent_bound.value
    g = math.gcd(a.value, modulus)
    if g != 1:
        raise NotInvertibleError(a.value, modulus, g)
    if pow(a.value, bound, modulus) != 1:
        raise BoundViolationError(a.value, modulus, bound)

    order = bound
    for prime, exponent in group_exponent_bound:
        order //= prime ** exponent
        x = pow(a.value, order, modulus)
        while x != 1:
            x = pow(x, prime, modulus)
            order *= prime
    return order
