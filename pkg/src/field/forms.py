"""
Indefinite binary quadratic forms A x^2 + B xy + C y^2 of positive discriminant.

A form is reduced when 0 < B < sqrt(D) and sqrt(D) - B < 2|A| < sqrt(D) + B. The
reduction operator ``rho`` permutes the finitely many reduced forms and its
cycles are exactly the proper equivalence classes, so counting cycles gives the
narrow class number.
"""
import math
from dataclasses import dataclass
from typing import List

from loguru import logger

from src.utlis.errors import InvalidArgumentError


@dataclass(frozen=True, slots=True)
class BinaryQF:
    a: int
    b: int
    c: int

    def __repr__(self):
        return f"{self.a}x^2 + {self.b}xy + {self.c}y^2"

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    def discriminant(self) -> int:
        return self.b ** 2 - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    def is_reduced(self) -> bool:
        d = self.discriminant()
        a2 = 2 * abs(self.a)
        if self.b <= 0 or self.b * self.b >= d:
            return False
        # sqrt(d) - b < 2|a|  and  2|a| - b < sqrt(d), exact in integers
        if (a2 + self.b) ** 2 <= d:
            return False
        return a2 - self.b < 0 or (a2 - self.b) ** 2 < d

    def rho(self) -> "BinaryQF":
        """Next reduced neighbour: (C, B', A') with B' = -B (mod 2|C|), sqrt(D) - 2|C| < B' < sqrt(D)."""
        d = self.discriminant()
        s = math.isqrt(d)
        m = 2 * abs(self.c)
        b_next = s - (s + self.b) % m
        num = b_next * b_next - d
        if num % (4 * self.c) != 0:
            raise InvalidArgumentError(f"rho undefined on {self!r}")
        return BinaryQF(self.c, b_next, num // (4 * self.c))


def _divisors(n: int) -> List[int]:
    small, large = [], []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def reduced_forms(d: int) -> List[BinaryQF]:
    """Every primitive reduced form of discriminant d, in a fixed order."""
    s = math.isqrt(d)
    if d <= 0 or s * s == d:
        raise InvalidArgumentError(f"reduced forms need a positive non-square discriminant, got {d}")
    forms = []
    for b in range(d % 2 or 2, s + 1, 2):
        if (b * b - d) % 4:
            continue
        ac = (b * b - d) // 4
        for a_abs in _divisors(-ac):
            for a in (a_abs, -a_abs):
                form = BinaryQF(a, b, ac // a)
                if form.is_reduced() and form.is_primitive():
                    forms.append(form)
    return forms


def form_cycles(d: int) -> List[List[BinaryQF]]:
    seen = set()
    cycles = []
    for form in reduced_forms(d):
        if form in seen:
            continue
        cycle = [form]
        seen.add(form)
        nxt = form.rho()
        while nxt != form:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = nxt.rho()
        cycles.append(cycle)
    return cycles


def class_number_narrow(d: int) -> int:
    cycles = form_cycles(d)
    logger.debug("d={} has {} reduced-form cycles", d, len(cycles))
    return len(cycles)
