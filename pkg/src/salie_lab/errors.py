"""Exception hierarchy shared by all salie_lab modules."""


class SalieLabError(Exception):
    """Base class for every error raised by this package."""


class FieldError(SalieLabError, ValueError):
    pass


class NotPrime(FieldError):
    pass


class EvenModulus(FieldError):
    pass


class ModulusTooLarge(FieldError):
    pass


class ZeroInverse(FieldError, ZeroDivisionError):
    pass


class SharedFactor(SalieLabError, ValueError):
    """An argument shares a factor with the modulus where a unit is required."""


class SharedFactorM(SharedFactor):
    pass


class LengthMismatch(SalieLabError, ValueError):
    pass


class DegenerateTerm(SalieLabError, ValueError):
    def __init__(self, m: int, n: int):
        super().__init__(f"a*m*n + b == 0 (mod q) at m={m}, n={n}")
        self.m = m
        self.n = n


class UnboundedWeights(SalieLabError, ValueError):
    pass


class ConditionFail(SalieLabError, ValueError):
    """A theorem's range condition is violated; `condition` names the inequality."""

    def __init__(self, condition: str):
        super().__init__(f"condition violated: {condition}")
        self.condition = condition


class HypothesisFail(SalieLabError, ValueError):
    pass


class LimitTooLarge(SalieLabError, ValueError):
    pass


class DepthTooLarge(SalieLabError, ValueError):
    pass


class EmptyMultiset(SalieLabError, ValueError):
    pass


class EmptySpectrum(SalieLabError, ValueError):
    pass


class NoPrimes(SalieLabError, ValueError):
    pass


class OracleTooLarge(SalieLabError, ValueError):
    pass


class SpecParse(SalieLabError, ValueError):
    pass


class UnknownKind(SpecParse):
    pass


class ResourceExceeded(SalieLabError, RuntimeError):
    pass


class UnsupportedFormat(SalieLabError, ValueError):
    pass
