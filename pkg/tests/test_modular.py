"""Modular engine: residues, fast powers, the double-mod identity, and the
timing harness."""

import random

import pytest

from gcdlab.errors import InvalidInput, InvalidModulus, PreconditionViolated, Underflow
from gcdlab.formulas import euclid_gcd
from gcdlab.modular import (
    BENCH_CSV_HEADER,
    FALLBACK_IDENTITY_INSTANCE,
    ModIdentityInstance,
    bench_compare,
    check_mod_identity,
    divmod_direct_value,
    fast_pow_mod,
    mod_euclidean,
    modmod_direct_signed,
    modmod_fast_value,
    modmod_signed_value,
    random_identity_instance,
    validate_identity_instance,
)


def test_mod_euclidean_examples():
    assert mod_euclidean(-50, 6) == 4
    assert mod_euclidean(125, 16) == 13
    assert mod_euclidean(0, 7) == 0
    assert mod_euclidean(-12, 4) == 0


def test_mod_euclidean_least_nonnegative_on_random_inputs():
    rng = random.Random(3)
    for _ in range(1000):
        x = rng.randint(-(10**12), 10**12)
        y = rng.randint(1, 10**9)
        r = mod_euclidean(x, y)
        assert 0 <= r < y
        assert (x - r) % y == 0


def test_mod_euclidean_rejects_nonpositive_modulus():
    with pytest.raises(InvalidModulus):
        mod_euclidean(5, 0)
    with pytest.raises(InvalidModulus):
        mod_euclidean(5, -3)


def test_fast_pow_mod_examples():
    assert fast_pow_mod(5, 3, 7) == 6
    assert fast_pow_mod(2, 10, 1000) == 24
    assert fast_pow_mod(0, 0, 7) == 1
    assert fast_pow_mod(9, 0, 100) == 1
    assert fast_pow_mod(4, 13, 1) == 0


def test_fast_pow_mod_matches_builtin_pow():
    rng = random.Random(4)
    for _ in range(500):
        base = rng.randrange(0, 10**6)
        exp = rng.randrange(0, 10**4)
        modulus = rng.randrange(1, 10**9)
        assert fast_pow_mod(base, exp, modulus) == pow(base, exp, modulus)


def test_fast_pow_mod_rejects_bad_arguments():
    with pytest.raises(InvalidModulus):
        fast_pow_mod(2, 3, 0)
    with pytest.raises(InvalidInput):
        fast_pow_mod(2, -1, 5)
    with pytest.raises(InvalidInput):
        fast_pow_mod(-2, 1, 5)


def test_identity_frozen_instances():
    assert check_mod_identity(ModIdentityInstance(50, 6, 5)) == (4, 4, True)
    assert check_mod_identity(ModIdentityInstance(125, 16, 5)) == (3, 3, True)


def test_identity_precondition_violations():
    with pytest.raises(PreconditionViolated, match="divisor mod modulus"):
        check_mod_identity(ModIdentityInstance(50, 7, 5))
    with pytest.raises(PreconditionViolated, match="modulus must divide"):
        check_mod_identity(ModIdentityInstance(51, 6, 5))
    with pytest.raises(PreconditionViolated, match="must not divide"):
        check_mod_identity(ModIdentityInstance(30, 6, 5))
    with pytest.raises(PreconditionViolated, match="floor quotient"):
        check_mod_identity(ModIdentityInstance(25, 6, 5))
    with pytest.raises(PreconditionViolated, match="dividend must be positive"):
        check_mod_identity(ModIdentityInstance(0, 6, 5))
    with pytest.raises(PreconditionViolated, match="divisor must be positive"):
        check_mod_identity(ModIdentityInstance(10, 0, 5))
    with pytest.raises(PreconditionViolated, match="at least 2"):
        check_mod_identity(ModIdentityInstance(6, 7, 1))


def test_identity_on_many_random_instances():
    for seed in range(1000):
        inst = random_identity_instance(seed)
        check = check_mod_identity(inst)
        assert check.holds, (inst, check)


def test_random_instance_is_deterministic():
    assert random_identity_instance(123) == random_identity_instance(123)


def test_fallback_instance_is_valid():
    validate_identity_instance(FALLBACK_IDENTITY_INSTANCE)
    assert check_mod_identity(FALLBACK_IDENTITY_INSTANCE).holds


def test_negating_a_floor_quotient_shifts_it_by_one():
    rng = random.Random(5)
    for _ in range(1000):
        a = rng.randint(1, 10**12)
        b = rng.randint(2, 10**6)
        if a % b == 0:
            continue
        assert -((-a) // b) == a // b + 1


def test_modmod_frozen_values():
    assert modmod_fast_value(1, 1, 5) == 1
    assert modmod_fast_value(9, 12, 5) == 3
    assert modmod_fast_value(10, 10, 5) == 10


def test_modmod_underflow_and_signed_values():
    with pytest.raises(Underflow):
        modmod_fast_value(1, 1, 2)
    assert modmod_signed_value(1, 1, 2) == -2
    assert modmod_signed_value(1, 1, 3) == -1
    assert modmod_signed_value(1, 1, 4) == -2


def test_modmod_validates_inputs():
    with pytest.raises(InvalidInput):
        modmod_fast_value(0, 1, 5)
    from gcdlab.errors import BaseTooSmall

    with pytest.raises(BaseTooSmall):
        modmod_fast_value(1, 1, 1)


def test_fast_path_equals_materializing_path():
    for base in (2, 3, 5):
        for a in range(1, 7):
            for b in range(1, 7):
                assert modmod_signed_value(a, b, base) == modmod_direct_signed(a, b, base)


def test_modmod_matches_euclid_on_grid():
    for a in range(1, 13):
        for b in range(1, 13):
            assert modmod_fast_value(a, b, 5) == euclid_gcd(a, b)


def test_divmod_direct_value_clamps_like_the_term():
    assert divmod_direct_value(1, 1, 2) == 0
    assert divmod_direct_value(1, 1, 3) == 0
    assert divmod_direct_value(1, 1, 4) == 2
    assert divmod_direct_value(12, 18, 5) == 6


def test_bench_compare_record_shape():
    record = bench_compare(4, 6, 5, 3)
    assert record.values_equal
    assert record.bits_a > 1000
    assert record.divmod_ns >= 0 and record.modmod_ns >= 0
    assert record.csv_row().startswith("4,6,5,")
    assert record.csv_row().endswith(",true")
    fields = ["a", "b", "c", "bits_A", "divmod_ns", "modmod_ns", "equal"]
    assert list(record.json_dict()) == fields
    assert BENCH_CSV_HEADER.split(",") == fields


def test_bench_compare_flags_disagreement_on_exception_pair():
    record = bench_compare(1, 1, 2, 1)
    assert not record.values_equal
    assert record.csv_row().endswith(",false")


def test_bench_compare_validates_repetitions():
    with pytest.raises(InvalidInput):
        bench_compare(2, 2, 5, 0)
