"""Shared exception types for the gcd laboratory."""


class GcdLabError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidInput(GcdLabError):
    """An argument is outside the documented domain of an operation."""


class UnboundVariable(GcdLabError):
    def __init__(self, name: str):
        super().__init__(f"unbound variable: {name}")
        self.name = name


class DivisionByZero(GcdLabError):
    """Floor division or remainder with a zero right operand."""


class ExponentGuardExceeded(GcdLabError):
    def __init__(self, exponent: int, limit: int):
        super().__init__(f"exponent {exponent} exceeds the guard limit {limit}")
        self.exponent = exponent
        self.limit = limit


class BaseTooSmall(GcdLabError):
    """An exponentiation or extraction base below 2."""


class ZeroDenominator(GcdLabError):
    """A denominator that is zero where it must not be."""


class NegativeCoefficient(GcdLabError):
    def __init__(self, index: int, value: int):
        super().__init__(f"series coefficient s({index}) = {value} is negative")
        self.index = index
        self.value = value


class NonIntegerCoefficient(GcdLabError):
    def __init__(self, index: int):
        super().__init__(f"series coefficient s({index}) is not an integer")
        self.index = index


class NoValidRank(GcdLabError):
    """No rank within the checked window satisfies the growth condition."""


class InvalidModulus(GcdLabError):
    """A modulus that is not a positive integer."""


class PreconditionViolated(GcdLabError):
    def __init__(self, which: str):
        super().__init__(f"precondition violated: {which}")
        self.which = which


class Underflow(GcdLabError):
    """A formula value dropped below zero outside its validity domain."""
