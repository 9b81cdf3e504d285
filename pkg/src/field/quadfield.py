"""
Invariants of the real quadratic field Q(sqrt d) for a fundamental discriminant d.

Elements of the maximal order are written (u + v sqrt d) / 2 with u = v d (mod 2),
the same convention for odd d and for d = 0 (mod 4).
"""
import math
from functools import lru_cache
from typing import Literal, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, model_validator

from src.arith.factor import factorize
from src.field.forms import class_number_narrow
from src.utlis.errors import InvalidArgumentError


class QuadraticInteger(BaseModel):
    model_config = ConfigDict(frozen=True)

    u: int
    v: int
    d: int

    @model_validator(mode="after")
    def _in_maximal_order(self):
        if (self.u - self.v * self.d) % 2:
            raise ValueError(f"({self.u} + {self.v}*sqrt({self.d}))/2 is not integral")
        return self

    @property
    def norm(self) -> int:
        return (self.u * self.u - self.d * self.v * self.v) // 4

    @property
    def trace(self) -> int:
        return self.u

    def conjugate(self) -> "QuadraticInteger":
        return QuadraticInteger(u=self.u, v=-self.v, d=self.d)

    def __mul__(self, other: "QuadraticInteger") -> "QuadraticInteger":
        if other.d != self.d:
            raise InvalidArgumentError("cannot multiply elements of different fields")
        return QuadraticInteger(
            u=(self.u * other.u + self.v * other.v * self.d) // 2,
            v=(self.u * other.v + other.u * self.v) // 2,
            d=self.d,
        )

    def __float__(self) -> float:
        return (self.u + self.v * math.sqrt(self.d)) / 2

    def __str__(self) -> str:
        sign = "+" if self.v >= 0 else "-"
        return f"({self.u} {sign} {abs(self.v)}*sqrt({self.d}))/2"


class QuadraticField(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: int
    unit: QuadraticInteger
    trace_a: int
    norm_b: Literal[1, -1]
    disc_unit_sq: int
    h_narrow: int
    h: int
    cf_period: int

    @model_validator(mode="after")
    def _check_invariants(self):
        if self.trace_a ** 2 - 4 * self.norm_b != self.disc_unit_sq:
            raise ValueError("trace_a^2 - 4 norm_b must equal disc_unit_sq")
        if self.disc_unit_sq != self.d * self.unit.v ** 2:
            raise ValueError("disc_unit_sq must equal d v^2")
        expected_h = self.h_narrow if self.norm_b == -1 else self.h_narrow // 2
        if self.h != expected_h or self.h < 1:
            raise ValueError(f"h={self.h} inconsistent with h_narrow={self.h_narrow}, norm={self.norm_b}")
        return self


def _is_squarefree(m: int) -> bool:
    return m >= 1 and all(exponent == 1 for _, exponent in factorize(m))


def is_fundamental_discriminant(d: int) -> bool:
    if d <= 1:
        return False
    if d % 4 == 1:
        return _is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


def to_fundamental_discriminant(n: int) -> int:
    """Discriminant of Q(sqrt n) for a squarefree n > 1."""
    if n <= 1 or not _is_squarefree(n):
        raise InvalidArgumentError(f"expected a squarefree integer > 1, got {n}")
    return n if n % 4 == 1 else 4 * n


def _require_fundamental(d: int) -> None:
    if not is_fundamental_discriminant(d):
        raise InvalidArgumentError(f"{d} is not a fundamental discriminant")


def continued_fraction_unit(d: int) -> Tuple[QuadraticInteger, int]:
    """
    Expand omega = (P0 + sqrt d)/2 (P0 = d mod 2) until the complete quotient
    denominator returns to 2; the last convergent p/q gives eps = p - q*conj(omega).

    Returns:
        (eps_d, period length of the expansion)
    """
    _require_fundamental(d)
    s = math.isqrt(d)
    p0 = d % 2
    P, Q = p0, 2
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    steps = 0
    while True:
        a = (P + s) // Q
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        steps += 1
        P = a * Q - P
        Q = (d - P * P) // Q
        if Q == 2:
            break
    unit = QuadraticInteger(u=2 * p_cur - p0 * q_cur, v=q_cur, d=d)
    if abs(unit.norm) != 1:
        raise InvalidArgumentError(f"continued fraction for d={d} produced a non-unit {unit}")
    return unit, steps


def fundamental_unit(d: int) -> QuadraticInteger:
    return continued_fraction_unit(d)[0]


@lru_cache(maxsize=4096)
def field_invariants(d: int) -> QuadraticField:
    unit, period = continued_fraction_unit(d)
    h_narrow = class_number_narrow(d)
    norm_b = unit.norm
    field = QuadraticField(
        d=d,
        unit=unit,
        trace_a=unit.u,
        norm_b=norm_b,
        disc_unit_sq=d * unit.v ** 2,
        h_narrow=h_narrow,
        h=h_narrow if norm_b == -1 else h_narrow // 2,
        cf_period=period,
    )
    logger.debug("Q(sqrt {}): eps={} N={} h={} h+={}", d, unit, norm_b, field.h, h_narrow)
    return field
