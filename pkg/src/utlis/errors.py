from typing import Any, Optional


class QPRatError(Exception):
    """Root of every error raised by the p-rationality toolkit."""

    exit_code = 1

    def details(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}

    def __reduce__(self):
        # scan workers raise these across process boundaries
        return type(self), getattr(self, "_init_args", self.args)


class InvalidArgumentError(QPRatError, ValueError):
    pass


class ConfigurationError(QPRatError, ValueError):
    pass


class NotInvertibleError(QPRatError, ArithmeticError):
    def __init__(self, value: int, modulus: int, gcd: int):
        super().__init__(f"{value} is not invertible modulo {modulus} (gcd={gcd})")
        self._init_args = (value, modulus, gcd)
        self.value = value
        self.modulus = modulus
        self.gcd = gcd


class BoundViolationError(QPRatError, ArithmeticError):
    def __init__(self, value: int, modulus: int, bound: int):
        super().__init__(f"{value}^{bound} != 1 (mod {modulus})")
        self._init_args = (value, modulus, bound)
        self.value = value
        self.modulus = modulus
        self.bound = bound


class RamifiedPrimeError(QPRatError, ValueError):
    def __init__(self, d: int, p: int):
        super().__init__(f"p={p} is ramified or even for d={d}")
        self._init_args = (d, p)
        self.d = d
        self.p = p


class ExcludedPrimeError(QPRatError, ValueError):
    def __init__(self, d: int, p: int, divisor: str, reason: str):
        super().__init__(f"p={p} excluded for d={d}: p divides {divisor} ({reason})")
        self._init_args = (d, p, divisor, reason)
        self.d = d
        self.p = p
        self.divisor = divisor
        self.reason = reason


class OracleLimitError(QPRatError, ValueError):
    pass


class _ReportError(QPRatError):
    """Carries a pydantic report so the CLI can dump it verbatim."""

    exit_code = 2

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self._init_args = (message, report)
        self.report = report

    def details(self) -> dict:
        data = super().details()
        if self.report is not None:
            data["report"] = self.report.model_dump(mode="json")
        return data


class InconsistencyError(_ReportError):
    pass


class CongruenceViolationError(_ReportError):
    pass


class EquivalenceViolationError(_ReportError):
    pass
