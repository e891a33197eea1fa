"""Signed modular arithmetic with least nonnegative residues, square-and-
multiply exponentiation, the double-mod quotient identity with checked
hypotheses, and the fast path for the mod-mod gcd formula, plus a timing
harness comparing it against materialize-and-divide.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    BaseTooSmall,
    InvalidInput,
    InvalidModulus,
    PreconditionViolated,
    Underflow,
)


def mod_euclidean(x: int, y: int) -> int:
    """Least nonnegative residue of x modulo y, for either sign of x."""
    if y < 1:
        raise InvalidModulus(f"modulus must be positive, got {y}")
    return x % y


def fast_pow_mod(base: int, exp: int, modulus: int) -> int:
    """base**exp % modulus by square-and-multiply, one squaring per exponent bit."""
    if modulus < 1:
        raise InvalidModulus(f"modulus must be positive, got {modulus}")
    if base < 0 or exp < 0:
        raise InvalidInput("base and exponent must be naturals")
    result = 1 % modulus
    square = base % modulus
    while exp:
        if exp & 1:
            result = result * square % modulus
        square = square * square % modulus
        exp >>= 1
    return result


@dataclass(frozen=True)
class ModIdentityInstance:
    """Inputs for ((-dividend) mod divisor) mod modulus
    = 1 + (dividend // divisor) mod modulus."""

    dividend: int
    divisor: int
    modulus: int


class IdentityCheck(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def validate_identity_instance(inst: ModIdentityInstance) -> None:
    """Raise PreconditionViolated naming the first failed hypothesis."""
    dividend, divisor, modulus = inst.dividend, inst.divisor, inst.modulus
    if dividend <= 0:
        raise PreconditionViolated("dividend must be positive")
    if divisor <= 0:
        raise PreconditionViolated("divisor must be positive")
    if modulus < 2:
        raise PreconditionViolated("modulus must be at least 2")
    if dividend % modulus != 0:
        raise PreconditionViolated(
            f"modulus must divide dividend: {dividend} mod {modulus} = {dividend % modulus}"
        )
    if dividend % divisor == 0:
        raise PreconditionViolated(f"divisor must not divide dividend: {divisor} divides {dividend}")
    if divisor % modulus != 1:
        raise PreconditionViolated(
            f"divisor mod modulus must be 1: {divisor} mod {modulus} = {divisor % modulus}"
        )
    if (dividend // divisor) % modulus == modulus - 1:
        raise PreconditionViolated("floor quotient is congruent to modulus - 1")


def check_mod_identity(inst: ModIdentityInstance) -> IdentityCheck:
    """Evaluate both sides of the double-mod quotient identity on a checked instance."""
    validate_identity_instance(inst)
    lhs = mod_euclidean(mod_euclidean(-inst.dividend, inst.divisor), inst.modulus)
    rhs = 1 + (inst.dividend // inst.divisor) % inst.modulus
    return IdentityCheck(lhs, rhs, lhs == rhs)


FALLBACK_IDENTITY_INSTANCE = ModIdentityInstance(dividend=50, divisor=6, modulus=5)


def random_identity_instance(seed: int) -> ModIdentityInstance:
    """Deterministically derive an instance satisfying every hypothesis.

    Construction makes the divisibility conditions hold by shape; the two
    remaining hypotheses are rejection-sampled with a bounded retry budget,
    falling back to a fixed known-good instance.
    """
    rng = random.Random(seed)
    for _ in range(64):
        modulus = rng.randint(2, 48)
        divisor = modulus * rng.randint(1, 64) + 1
        dividend = modulus * rng.randint(1, 4096)
        if dividend % divisor == 0:
            continue
        if (dividend // divisor) % modulus == modulus - 1:
            continue
        return ModIdentityInstance(dividend, divisor, modulus)
    return FALLBACK_IDENTITY_INSTANCE


def _formula_parts(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Exponent of the big power, the divisor product, and the cap modulus."""
    if a < 1 or b < 1:
        raise InvalidInput("formula arguments must be at least 1")
    if c < 2:
        raise BaseTooSmall(f"formula base must be at least 2, got {c}")
    exponent = a * b * (a * b + a + b)
    divisor = (c ** (a * a * b) - 1) * (c ** (a * b * b) - 1)
    cap = c ** (a * b)
    return exponent, divisor, cap


def modmod_signed_value(a: int, b: int, c: int) -> int:
    """Mod-mod formula value, allowed to go negative outside the validity domain."""
    exponent, divisor, cap = _formula_parts(a, b, c)
    residue = fast_pow_mod(c, exponent, divisor)
    return mod_euclidean(-residue, divisor) % cap - 2


def modmod_fast_value(a: int, b: int, c: int) -> int:
    """Fast mod-mod gcd value; the giant power is never materialized."""
    value = modmod_signed_value(a, b, c)
    if value < 0:
        raise Underflow(
            f"mod-mod value {value} below zero: ({a}, {b}) lies outside base {c}'s validity domain"
        )
    return value


def modmod_direct_signed(a: int, b: int, c: int) -> int:
    """Same value as modmod_signed_value, but materializing the full power."""
    exponent, divisor, cap = _formula_parts(a, b, c)
    return mod_euclidean(-(c**exponent), divisor) % cap - 2


def divmod_direct_value(a: int, b: int, c: int) -> int:
    """Div-mod formula by materializing the full power; clamped at 0 like the term."""
    exponent, divisor, cap = _formula_parts(a, b, c)
    inner = c**exponent // divisor % cap
    return inner - 1 if inner > 0 else 0


BENCH_CSV_HEADER = "a,b,c,bits_A,divmod_ns,modmod_ns,equal"


@dataclass(frozen=True)
class BenchRecord:
    a: int
    b: int
    c: int
    bits_a: int
    divmod_ns: int
    modmod_ns: int
    values_equal: bool

    def csv_row(self) -> str:
        flag = "true" if self.values_equal else "false"
        return f"{self.a},{self.b},{self.c},{self.bits_a},{self.divmod_ns},{self.modmod_ns},{flag}"

    def json_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "bits_A": self.bits_a,
            "divmod_ns": self.divmod_ns,
            "modmod_ns": self.modmod_ns,
            "equal": self.values_equal,
        }


def bench_compare(a: int, b: int, c: int, repetitions: int) -> BenchRecord:
    """Median wall-clock comparison of the two formula paths on one pair.

    Runs strictly sequentially; each repetition re-does the whole computation
    including materializing the power on the div-mod side.
    """
    if repetitions < 1:
        raise InvalidInput("repetitions must be at least 1")
    exponent, _, _ = _formula_parts(a, b, c)
    bits = (c**exponent).bit_length()

    divmod_value = modmod_value = 0
    divmod_times = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        divmod_value = divmod_direct_value(a, b, c)
        divmod_times.append(time.perf_counter_ns() - start)
    modmod_times = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        modmod_value = modmod_signed_value(a, b, c)
        modmod_times.append(time.perf_counter_ns() - start)

    return BenchRecord(
        a=a,
        b=b,
        c=c,
        bits_a=bits,
        divmod_ns=int(statistics.median(divmod_times)),
        modmod_ns=int(statistics.median(modmod_times)),
        values_equal=divmod_value == modmod_value,
    )
