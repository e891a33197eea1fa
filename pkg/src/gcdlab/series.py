"""Rational generating functions: exact series expansion, a solution-counting
oracle, and coefficient extraction through big powers of an integer base.

The coefficient sequence of 1/((z^a - 1)(z^b - 1)) counts the natural
solutions (x, y) of a*x + b*y = n; in particular the coefficient at
n = a*b equals gcd(a, b) + 1.  Every pole of that family lies on the unit
circle, so any extraction base c >= 2 clears the radius requirement; what
check_extraction_conditions verifies empirically is the growth condition
s(n) < c^(n-2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BaseTooSmall,
    InvalidInput,
    NegativeCoefficient,
    NonIntegerCoefficient,
    NoValidRank,
    ZeroDenominator,
)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial; coeffs[k] multiplies z^k, trailing zeros stripped."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(v) for v in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return Polynomial(tuple(out))


def parse_polynomial(text: str) -> Polynomial:
    """Parse comma-separated coefficients, lowest degree first: '1,-2,1'."""
    try:
        coeffs = tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise InvalidInput(f"bad polynomial text: {text!r}") from None
    return Polynomial(coeffs)


def polynomial_text(p: Polynomial) -> str:
    return ",".join(str(c) for c in p.coeffs) if p.coeffs else "0"


@dataclass(frozen=True)
class RationalFunction:
    """A(z)/B(z) with B(0) nonzero, so a power series exists at the origin.

    deg A may not exceed deg B; strictly improper fractions are rejected
    rather than polynomial-divided.
    """

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if self.denominator.is_zero:
            raise ZeroDenominator("denominator polynomial is zero")
        if self.denominator.coefficient(0) == 0:
            raise ZeroDenominator("denominator vanishes at z = 0, no series there")
        if self.numerator.degree > self.denominator.degree:
            raise InvalidInput("numerator degree exceeds denominator degree")


def _z_power_minus_one(k: int) -> Polynomial:
    return Polynomial((-1,) + (0,) * (k - 1) + (1,))


def f_ab(a: int, b: int) -> RationalFunction:
    """1/((z^a - 1)(z^b - 1)); coefficient n counts solutions of a*x + b*y = n."""
    if a < 1 or b < 1:
        raise InvalidInput("both parameters must be at least 1")
    return RationalFunction(Polynomial((1,)), _z_power_minus_one(a) * _z_power_minus_one(b))


def series_coefficients(f: RationalFunction, count: int) -> list[int]:
    """First `count` Taylor coefficients at 0, via the recurrence B * s = A."""
    if count < 0:
        raise InvalidInput("count must be nonnegative")
    b = f.denominator.coeffs
    out: list[int] = []
    for n in range(count):
        acc = f.numerator.coefficient(n)
        for k in range(1, min(n, len(b) - 1) + 1):
            acc -= b[k] * out[n - k]
        q, r = divmod(acc, b[0])
        if r:
            raise NonIntegerCoefficient(n)
        out.append(q)
    return out


def count_solutions(a: int, b: int, n: int) -> int:
    """Number of natural pairs (x, y) with a*x + b*y = n, by direct enumeration."""
    if a < 1 or b < 1:
        raise InvalidInput("both parameters must be at least 1")
    if n < 0:
        return 0
    return sum(1 for x in range(n // a + 1) if (n - a * x) % b == 0)


def _eval_at_inverse(p: Polynomial, w: int, degree: int) -> int:
    """w^degree * p(1/w), an integer whenever degree >= deg p, via Horner."""
    acc = 0
    for j in range(degree + 1):
        acc = acc * w + p.coefficient(j)
    return acc


def extract_coefficient(f: RationalFunction, c: int, n: int) -> int:
    """Recover s(n) as floor(c^(n^2) * f(c^-n)) mod c^n, in exact integers.

    Clearing denominators with w = c^n and D = deg B turns f(1/w) into a
    ratio of integers, and Python's floor division rounds toward minus
    infinity, which is exactly the real floor even when signs differ.
    """
    if n < 1:
        raise InvalidInput("coefficient index must be at least 1")
    if c < 2:
        raise BaseTooSmall("extraction base must be at least 2")
    w = c**n
    depth = f.denominator.degree
    b_hat = _eval_at_inverse(f.denominator, w, depth)
    if b_hat == 0:
        raise ZeroDenominator(f"{c}^-{n} is a pole of the denominator")
    a_hat = _eval_at_inverse(f.numerator, w, depth)
    return (c ** (n * n) * a_hat) // b_hat % w


@dataclass(frozen=True)
class ExtractionParams:
    c: int
    m: int
    growth_margin_checked_to: int


def check_extraction_conditions(f: RationalFunction, c: int, n_max: int) -> ExtractionParams:
    """Expand the series and locate the least rank m from which extraction is valid.

    Rejects series that leave the naturals, then finds the least m with
    s(n) < c^(n-2) for every m <= n <= n_max (compared in integers as
    s(n) * c^2 < c^n).  The check is empirical: it promises nothing beyond
    n_max, which the returned params record.
    """
    if c < 2:
        raise BaseTooSmall("extraction base must be at least 2")
    if n_max < 0:
        raise InvalidInput("check window must be nonnegative")
    coeffs = series_coefficients(f, n_max + 1)
    for n, s in enumerate(coeffs):
        if s < 0:
            raise NegativeCoefficient(n, s)
    c_squared = c * c
    m = 0
    for n in range(n_max, -1, -1):
        if coeffs[n] * c_squared >= c**n:
            m = n + 1
            break
    if m > n_max:
        raise NoValidRank(f"growth condition still failing at n = {n_max} for base {c}")
    return ExtractionParams(c=c, m=m, growth_margin_checked_to=n_max)
