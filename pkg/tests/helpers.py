"""Shared random generators for the test suite."""

import random

from gcdlab.terms import Add, Const, FloorDiv, Mod, Monus, Mul, Pow, Var

VAR_NAMES = ("a", "b", "x", "y", "n")
BINARY_NODES = (Add, Monus, Mul, FloorDiv, Mod, Pow)


def random_term(rng: random.Random, depth: int, allow_vars: bool = True):
    """Arbitrary syntax tree of at most the given depth, for parser tests."""
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if allow_vars and roll < 0.4:
            return Var(rng.choice(VAR_NAMES))
        if roll < 0.5:
            return Const(rng.randrange(10**25))
        return Const(rng.randrange(100))
    node = rng.choice(BINARY_NODES)
    left = random_term(rng, depth - 1, allow_vars)
    right = random_term(rng, depth - 1, allow_vars)
    return node(left, right)


def random_tame_term(rng: random.Random, depth: int, var_names: tuple[str, ...] = ()):
    """Tree whose exact evaluation stays affordable, for semantics tests.

    Exponents are tiny constants so nested powers cannot explode.
    """
    if depth <= 0 or rng.random() < 0.3:
        if var_names and rng.random() < 0.35:
            return Var(rng.choice(var_names))
        return Const(rng.randrange(10))
    node = rng.choice(BINARY_NODES)
    if node is Pow:
        return Pow(random_tame_term(rng, depth - 1, var_names), Const(rng.randrange(4)))
    return node(
        random_tame_term(rng, depth - 1, var_names),
        random_tame_term(rng, depth - 1, var_names),
    )
