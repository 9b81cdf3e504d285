"""
Character sums for the Williams congruence

    h_d v F_{p-(d/p)} / p = -2 (d/p) N^(((d/p)-1)/2) sum_{i<=(p-1)/2} beta_p(i) / i   (mod p)

with beta_p(i) = sum_{j=1}^{{p'i}-1} (d/j), p' = p^{-1} mod d, {n} = n mod d, and
alpha_p(i) = sum of 1/k over 1 <= k <= (p-1)/2, k = i (mod d).
v is the sqrt d coordinate of eps, so v F_n = (eps^n - conj eps^n) / sqrt d.

Regrouping the left sum by residue class mod d gives sum_{i=1}^{d} beta_p(i) alpha_p(i),
whose vanishing mod p decides p-rationality when p does not divide (eps - conj eps)^2.
"""
from typing import List, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, model_validator

from src.arith.residue import inv_mod, kronecker
from src.criteria.fibmod import rank_fact_residue
from src.field.quadfield import QuadraticField, field_invariants
from src.utlis.errors import (
    CongruenceViolationError,
    ExcludedPrimeError,
    InconsistencyError,
    InvalidArgumentError,
    RamifiedPrimeError,
)


class WilliamsReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: int
    p: int
    p_inv: int
    # index 0 holds i = 1
    beta: List[int]
    alpha: List[int]
    lhs: int
    rhs: int
    criterion_sum: int
    harmonic_sum: int

    @model_validator(mode="after")
    def _shapes(self):
        if len(self.beta) != self.d or len(self.alpha) != self.d:
            raise ValueError("beta and alpha must have one entry per residue class 1..d")
        return self

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _check_odd_unramified(d: int, p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise InvalidArgumentError(f"p must be an odd prime, got {p}")
    if d % p == 0:
        raise RamifiedPrimeError(d, p)


def _character_prefix(d: int) -> List[int]:
    """prefix[n] = sum_{j=1}^{n} (d/j) for 0 <= n < d."""
    prefix = [0] * d
    total = 0
    for j in range(1, d):
        total += kronecker(d, j)
        prefix[j] = total
    return prefix


def beta_table(d: int, p: int) -> List[int]:
    """beta_p(i) for i = 1..d; an empty range ({p'i} in {0, 1}) sums to 0."""
    _check_odd_unramified(d, p)
    p_inv = inv_mod(p % d, d)
    prefix = _character_prefix(d)
    out = []
    for i in range(1, d + 1):
        upper = p_inv * i % d - 1
        out.append(prefix[upper] if upper >= 1 else 0)
    return out


def beta(d: int, p: int, i: int) -> int:
    _check_odd_unramified(d, p)
    p_inv = inv_mod(p % d, d)
    upper = p_inv * i % d - 1
    return sum(kronecker(d, j) for j in range(1, upper + 1))


def alpha_table(d: int, p: int) -> List[int]:
    """alpha_p(i) for i = 1..d."""
    if p < 3 or p % 2 == 0:
        raise InvalidArgumentError(f"p must be an odd prime, got {p}")
    out = [0] * d
    for k in range(1, (p - 1) // 2 + 1):
        # residue class i in 1..d, with i = d for k = 0 mod d
        idx = (k - 1) % d
        out[idx] = (out[idx] + pow(k, -1, p)) % p
    return out


def alpha(d: int, p: int, i: int) -> int:
    if p < 3 or p % 2 == 0:
        raise InvalidArgumentError(f"p must be an odd prime, got {p}")
    total = 0
    for k in range(1, (p - 1) // 2 + 1):
        if (k - i) % d == 0:
            total += pow(k, -1, p)
    return total % p


def sign_factor(field: QuadraticField, p: int) -> int:
    """-2 (d/p) N^(((d/p)-1)/2), always +-2."""
    chi = kronecker(field.d, p)
    n_power = 1 if chi == 1 else field.norm_b
    return -2 * chi * n_power


def williams_congruence(field: QuadraticField, p: int) -> WilliamsReport:
    d = field.d
    _check_odd_unramified(d, p)
    if field.unit.v % p == 0:
        # p | disc: F_{p-(d/p)} is a unit mod p and the left side is not p-integral
        raise ExcludedPrimeError(d, p, "v^2 in (eps - conj eps)^2 = d v^2", "rank fact needs p not dividing disc")
    f_mod_p2 = rank_fact_residue(field, p)
    if f_mod_p2 % p:
        raise InconsistencyError(f"rank fact fails: F_(p-(d/p)) = {f_mod_p2} (mod {p}^2), d={d}")
    lhs = field.h * field.unit.v * (f_mod_p2 // p) % p

    betas = beta_table(d, p)
    alphas = alpha_table(d, p)
    criterion_sum = sum(b * a for b, a in zip(betas, alphas)) % p
    harmonic_sum = sum(betas[(i - 1) % d] * pow(i, -1, p) for i in range(1, (p - 1) // 2 + 1)) % p
    rhs = sign_factor(field, p) * harmonic_sum % p

    report = WilliamsReport(
        d=d,
        p=p,
        p_inv=inv_mod(p % d, d),
        beta=betas,
        alpha=alphas,
        lhs=lhs,
        rhs=rhs,
        criterion_sum=criterion_sum,
        harmonic_sum=harmonic_sum,
    )
    if criterion_sum != harmonic_sum:
        raise InconsistencyError(f"regrouping identity fails for d={d}, p={p}", report)
    if lhs != rhs:
        raise CongruenceViolationError(f"Williams congruence fails for d={d}, p={p}: {lhs} != {rhs}", report)
    return report


def _require_not_excluded(field: QuadraticField, p: int) -> None:
    if field.d % p == 0 or field.unit.v % p == 0:
        raise ExcludedPrimeError(field.d, p, "(eps - conj eps)^2", "p divides d*v^2")


def williams_criterion(field: QuadraticField, p: int) -> bool:
    """True iff sum beta_p(i) alpha_p(i) != 0 (mod p), i.e. Q(sqrt d) is p-rational."""
    _require_not_excluded(field, p)
    report = williams_congruence(field, p)
    logger.debug("williams d={} p={} sum={}", field.d, p, report.criterion_sum)
    return report.criterion_sum != 0


def special_criterion(d: int, p: int) -> bool:
    """p = 3: beta_3(1) != 0 (mod 3); p = 5: beta_5(1) + 3 beta_5(2) != 0 (mod 5)."""
    if p not in (3, 5):
        raise InvalidArgumentError(f"special criterion exists only for p in (3, 5), got {p}")
    _require_not_excluded(field_invariants(d), p)
    if p == 3:
        return beta(d, 3, 1) % 3 != 0
    return (beta(d, 5, 1) + 3 * beta(d, 5, 2)) % 5 != 0


def golden_ratio_criterion(p: int) -> Tuple[bool, List[int]]:
    """
    Q(sqrt 5) for p = 1 (mod 5): sum_{i=1}^{5} beta_p(i) alpha_p(i) != 0 (mod p).

    The coefficients are recomputed from the beta definition, which gives
    (0, 1, 0, -1, 0); the published list (1, 1, 0, -1, 2) does not follow from it.
    """
    if p % 5 != 1:
        raise InvalidArgumentError(f"expected p = 1 (mod 5), got {p}")
    field = field_invariants(5)
    return williams_criterion(field, p), beta_table(5, p)
