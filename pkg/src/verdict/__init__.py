from src.verdict.decide import (
    CriteriaReport,
    Exclusion,
    Mode,
    Verdict,
    decide,
    exclusions,
    is_hard,
    simultaneous,
)

__all__ = ["CriteriaReport", "Exclusion", "Mode", "Verdict", "decide", "exclusions", "is_hard", "simultaneous"]
