from src.criteria.fibmod import (
    FibPair,
    FibParams,
    PeriodRecord,
    fib_iter_oracle,
    fib_pair,
    is_fibonacci_wieferich,
    period_linear,
    rank_of_apparition,
    wall_period,
    wall_period_square,
)
from src.criteria.unitresidue import (
    RingElem,
    WieferichReport,
    fermat_quotient,
    is_wieferich_base_unit,
    residue_degree,
    unit_fermat_class,
    unit_pow,
)
from src.criteria.williams import (
    WilliamsReport,
    alpha,
    beta,
    golden_ratio_criterion,
    special_criterion,
    williams_congruence,
    williams_criterion,
)

__all__ = [
    "FibPair",
    "FibParams",
    "PeriodRecord",
    "RingElem",
    "WieferichReport",
    "WilliamsReport",
    "alpha",
    "beta",
    "fermat_quotient",
    "fib_iter_oracle",
    "fib_pair",
    "golden_ratio_criterion",
    "is_fibonacci_wieferich",
    "is_wieferich_base_unit",
    "period_linear",
    "rank_of_apparition",
    "residue_degree",
    "special_criterion",
    "unit_fermat_class",
    "unit_pow",
    "wall_period",
    "wall_period_square",
    "williams_congruence",
    "williams_criterion",
]
