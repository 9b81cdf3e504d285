"""
One p-rationality verdict per (d, p).

Hard exclusions (p = 2, p | d, p | h_d) stop evaluation. When p divides only the
v-coordinate of eps_d, the Fibonacci, period and Williams criteria lose their
hypothesis but the unit-Wieferich criterion still decides, since it only needs
p not dividing d h_d.
"""
from enum import Enum
from typing import Iterable, List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict

from src.arith.factor import is_prime
from src.arith.residue import kronecker
from src.criteria.fibmod import FibParams, is_fibonacci_wieferich, wall_period, wall_period_square
from src.criteria.unitresidue import is_wieferich_base_unit
from src.criteria.williams import williams_criterion
from src.field.quadfield import QuadraticField
from src.utlis.errors import EquivalenceViolationError, InvalidArgumentError


class Exclusion(str, Enum):
    PRIME_IS_TWO = "PrimeIsTwo"
    DIVIDES_UNIT_DISCRIMINANT = "DividesUnitDiscriminant"
    DIVIDES_CLASS_NUMBER = "DividesClassNumber"
    SMALL_PRIME_NOTE = "SmallPrimeNote"


class Verdict(str, Enum):
    P_RATIONAL = "PRational"
    NOT_P_RATIONAL = "NotPRational"
    EXCLUDED = "Excluded"


class Mode(str, Enum):
    FAST = "Fast"
    CROSS_VALIDATE = "CrossValidate"


class CriteriaReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: int
    p: int
    excluded: List[Exclusion] = []
    fibonacci_wieferich: Optional[bool] = None
    wieferich_unit: Optional[bool] = None
    period_equal: Optional[bool] = None
    williams_nonzero: Optional[bool] = None
    verdict: Verdict

    def failure_signals(self) -> List[bool]:
        """Each evaluated criterion, oriented so True means 'not p-rational'."""
        signals = [self.fibonacci_wieferich, self.wieferich_unit, self.period_equal]
        if self.williams_nonzero is not None:
            signals.append(not self.williams_nonzero)
        return [s for s in signals if s is not None]

    def is_consistent(self) -> bool:
        return len(set(self.failure_signals())) <= 1


def exclusions(field: QuadraticField, p: int) -> List[Exclusion]:
    out = []
    if p == 2:
        out.append(Exclusion.PRIME_IS_TWO)
    if field.d % p == 0 or field.unit.v % p == 0:
        out.append(Exclusion.DIVIDES_UNIT_DISCRIMINANT)
    if field.h % p == 0:
        out.append(Exclusion.DIVIDES_CLASS_NUMBER)
    if p == 3:
        out.append(Exclusion.SMALL_PRIME_NOTE)
    return out


def is_hard(field: QuadraticField, p: int, excluded: Iterable[Exclusion]) -> bool:
    excluded = set(excluded)
    if Exclusion.PRIME_IS_TWO in excluded or Exclusion.DIVIDES_CLASS_NUMBER in excluded:
        return True
    return Exclusion.DIVIDES_UNIT_DISCRIMINANT in excluded and field.d % p == 0


def _verdict(fails: bool) -> Verdict:
    return Verdict.NOT_P_RATIONAL if fails else Verdict.P_RATIONAL


def decide(field: QuadraticField, p: int, mode: Mode = Mode.FAST) -> CriteriaReport:
    mode = Mode(mode)
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")

    excluded = exclusions(field, p)
    base = dict(d=field.d, p=p, excluded=excluded)

    if is_hard(field, p, excluded):
        logger.debug("d={} p={} excluded: {}", field.d, p, [e.value for e in excluded])
        return CriteriaReport(**base, verdict=Verdict.EXCLUDED)

    if Exclusion.DIVIDES_UNIT_DISCRIMINANT in excluded:
        wieferich = is_wieferich_base_unit(field, p).is_wieferich
        return CriteriaReport(**base, wieferich_unit=wieferich, verdict=_verdict(wieferich))

    fw = is_fibonacci_wieferich(field, p)
    if mode is Mode.FAST:
        return CriteriaReport(**base, fibonacci_wieferich=fw, verdict=_verdict(fw))

    wu = is_wieferich_base_unit(field, p).is_wieferich
    params = FibParams.from_field(field)
    period = wall_period(params, p, kronecker(field.d, p))
    period_equal = wall_period_square(params, p, period.k) == period.k
    williams_nonzero = williams_criterion(field, p)

    report = CriteriaReport(
        **base,
        fibonacci_wieferich=fw,
        wieferich_unit=wu,
        period_equal=period_equal,
        williams_nonzero=williams_nonzero,
        verdict=_verdict(fw),
    )
    if not report.is_consistent():
        logger.error("criteria disagree for d={} p={}: {}", field.d, p, report.model_dump(mode="json"))
        raise EquivalenceViolationError(f"criteria disagree for d={field.d}, p={p}", report)
    return report


def simultaneous(fields: Iterable[QuadraticField], p: int, mode: Mode = Mode.FAST) -> Optional[bool]:
    """
    True when every field is p-rational, False when one is not; None when no
    member fails but some member is excluded.
    """
    indeterminate = False
    for field in fields:
        verdict = decide(field, p, mode).verdict
        if verdict is Verdict.NOT_P_RATIONAL:
            return False
        if verdict is Verdict.EXCLUDED:
            indeterminate = True
    return None if indeterminate else True
