"""
Arithmetic in O_d / p^2 O_d for odd p not dividing d, in half coordinates.

An element (u + v sqrt d)/2 is stored as the pair (u, v) mod p^2; since 2 is a
unit mod p^2 the map is a ring isomorphism onto Z/p^2[sqrt d], and 1 is (2, 0).
"""
from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from src.arith.residue import kronecker
from src.field.quadfield import QuadraticField
from src.utlis.errors import InconsistencyError, InvalidArgumentError, RamifiedPrimeError


@dataclass(frozen=True, slots=True)
class RingElem:
    u: int
    v: int
    d: int
    modulus: int

    @classmethod
    def one(cls, d: int, modulus: int) -> "RingElem":
        return cls(2 % modulus, 0, d % modulus, modulus)

    @classmethod
    def of(cls, u: int, v: int, d: int, modulus: int) -> "RingElem":
        return cls(u % modulus, v % modulus, d % modulus, modulus)

    def _check(self, other: "RingElem") -> None:
        if other.modulus != self.modulus or other.d != self.d:
            raise InvalidArgumentError("ring elements live in different rings")

    def __mul__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        m = self.modulus
        half = (m + 1) // 2  # 1/2 mod an odd modulus
        u = (self.u * other.u + self.v * other.v * self.d) * half % m
        v = (self.u * other.v + other.u * self.v) * half % m
        return RingElem(u, v, self.d, m)

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem((self.u + other.u) % self.modulus, (self.v + other.v) % self.modulus, self.d, self.modulus)

    def __sub__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem((self.u - other.u) % self.modulus, (self.v - other.v) % self.modulus, self.d, self.modulus)

    def conjugate(self) -> "RingElem":
        return RingElem(self.u, -self.v % self.modulus, self.d, self.modulus)

    def norm(self) -> int:
        """(u^2 - d v^2)/4 mod modulus."""
        quarter = pow(4, -1, self.modulus)
        return (self.u * self.u - self.d * self.v * self.v) * quarter % self.modulus

    def __pow__(self, e: int) -> "RingElem":
        if e < 0:
            raise InvalidArgumentError(f"exponent must be non-negative, got {e}")
        result = RingElem.one(self.d, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_one(self) -> bool:
        return self.u == 2 % self.modulus and self.v == 0


class WieferichReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    r: Literal[1, 2]
    fermat_quotient: int
    is_wieferich: bool

    @model_validator(mode="after")
    def _zero_iff_wieferich(self):
        if self.is_wieferich != (self.fermat_quotient == 0):
            raise ValueError("is_wieferich must be equivalent to a vanishing Fermat quotient")
        return self


def _require_unramified(d: int, p: int) -> None:
    if p < 3 or p % 2 == 0 or d % p == 0:
        raise RamifiedPrimeError(d, p)


def residue_degree(d: int, p: int) -> int:
    _require_unramified(d, p)
    return 1 if kronecker(d, p) == 1 else 2


def unit_pow(field: QuadraticField, e: int, p: int) -> RingElem:
    _require_unramified(field.d, p)
    m = p * p
    return RingElem.of(field.unit.u, field.unit.v, field.d, m) ** e


def unit_fermat_class(field: QuadraticField, p: int) -> RingElem:
    """
    The class w' = (eps^(p^r - 1) - 1)/p as an element mod p.

    Raises:
        InconsistencyError: eps^(p^r - 1) is not 1 mod p, which no valid input produces.
    """
    r = residue_degree(field.d, p)
    x = unit_pow(field, p ** r - 1, p)
    w_u = (x.u - 2) % (p * p)
    w_v = x.v
    if w_u % p or w_v % p:
        raise InconsistencyError(f"eps^(p^r-1) != 1 (mod {p}) for d={field.d}")
    return RingElem.of(w_u // p, w_v // p, field.d, p)


def fermat_quotient(field: QuadraticField, p: int) -> int:
    """
    Scalar display value of Q_p(eps): the sqrt(d)-coefficient of w' mod p.

    The rational coefficient of w' is always zero (N(eps^(p^r-1)) = 1 forces
    Tr(w') = 0 mod p), so this coefficient vanishes exactly when w' does.
    """
    w = unit_fermat_class(field, p)
    if w.u != 0:
        raise InconsistencyError(f"rational part of Q_p(eps) is {w.u}, expected 0 (d={field.d}, p={p})")
    return w.v * ((p + 1) // 2) % p


def is_wieferich_base_unit(field: QuadraticField, p: int) -> WieferichReport:
    r = residue_degree(field.d, p)
    q = fermat_quotient(field, p)
    return WieferichReport(p=p, r=r, fermat_quotient=q, is_wieferich=q == 0)
