"""AST for a natural-number term language and its exact evaluator.

Operators: addition, truncated subtraction (clamped at zero), multiplication,
floor division, exponentiation, and a remainder node.  Remainder is sugar:
``desugar_mod`` rewrites it using the other five operators.  All values are
arbitrary-precision naturals and evaluation is exact.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .errors import (
    DivisionByZero,
    ExponentGuardExceeded,
    InvalidInput,
    UnboundVariable,
)

Env = Mapping[str, int]

_IDENT_START = set(string.ascii_letters + "_")
_IDENT_REST = set(string.ascii_letters + string.digits + "_")


def is_identifier(name: str) -> bool:
    """ASCII identifier: letter or underscore, then letters, digits, underscores."""
    if not name or name[0] not in _IDENT_START:
        return False
    return all(ch in _IDENT_REST for ch in name[1:])


@dataclass(frozen=True)
class Const:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise InvalidInput(f"constants are naturals, got {self.value}")


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not is_identifier(self.name):
            raise InvalidInput(f"not a valid variable name: {self.name!r}")


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Monus:
    """Truncated subtraction: left - right, or 0 when right exceeds left."""

    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class FloorDiv:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Pow:
    base: "Term"
    exp: "Term"


@dataclass(frozen=True)
class Mod:
    left: "Term"
    right: "Term"


Term = Union[Const, Var, Add, Monus, Mul, FloorDiv, Pow, Mod]


def evaluate(term: Term, env: Optional[Env] = None, max_exponent: Optional[int] = None) -> int:
    """Exactly evaluate a term; every free variable must be bound in env.

    max_exponent, when given, bounds the value any exponent may take: a larger
    one raises ExponentGuardExceeded instead of attempting a gigantic power.
    """
    bindings: Env = env if env is not None else {}

    def go(t: Term) -> int:
        if isinstance(t, Const):
            return t.value
        if isinstance(t, Var):
            try:
                return bindings[t.name]
            except KeyError:
                raise UnboundVariable(t.name) from None
        if isinstance(t, Add):
            return go(t.left) + go(t.right)
        if isinstance(t, Monus):
            left, right = go(t.left), go(t.right)
            return left - right if left > right else 0
        if isinstance(t, Mul):
            return go(t.left) * go(t.right)
        if isinstance(t, FloorDiv):
            left, right = go(t.left), go(t.right)
            if right == 0:
                raise DivisionByZero("floor division by zero")
            return left // right
        if isinstance(t, Mod):
            left, right = go(t.left), go(t.right)
            if right == 0:
                raise DivisionByZero("remainder by zero")
            return left % right
        if isinstance(t, Pow):
            exp = go(t.exp)
            if max_exponent is not None and exp > max_exponent:
                raise ExponentGuardExceeded(exp, max_exponent)
            return go(t.base) ** exp  # 0^0 evaluates to 1 by definition
        raise TypeError(f"not a term: {t!r}")

    return go(term)


def substitute(term: Term, env: Env) -> Term:
    """Replace each variable bound in env by its constant; others stay free."""
    if isinstance(term, Const):
        return term
    if isinstance(term, Var):
        if term.name in env:
            return Const(env[term.name])
        return term
    if isinstance(term, Pow):
        base, exp = substitute(term.base, env), substitute(term.exp, env)
        if base is term.base and exp is term.exp:
            return term
        return Pow(base, exp)
    left, right = substitute(term.left, env), substitute(term.right, env)
    if left is term.left and right is term.right:
        return term
    return type(term)(left, right)


def desugar_mod(term: Term) -> Term:
    """Rewrite every remainder node as x - y*(x/y); the result has none left."""
    if isinstance(term, (Const, Var)):
        return term
    if isinstance(term, Pow):
        base, exp = desugar_mod(term.base), desugar_mod(term.exp)
        if base is term.base and exp is term.exp:
            return term
        return Pow(base, exp)
    left, right = desugar_mod(term.left), desugar_mod(term.right)
    if isinstance(term, Mod):
        return Monus(left, Mul(right, FloorDiv(left, right)))
    if left is term.left and right is term.right:
        return term
    return type(term)(left, right)


def free_variables(term: Term) -> frozenset[str]:
    if isinstance(term, Const):
        return frozenset()
    if isinstance(term, Var):
        return frozenset((term.name,))
    if isinstance(term, Pow):
        return free_variables(term.base) | free_variables(term.exp)
    return free_variables(term.left) | free_variables(term.right)


def is_closed(term: Term) -> bool:
    return not free_variables(term)


def contains_mod(term: Term) -> bool:
    if isinstance(term, (Const, Var)):
        return False
    if isinstance(term, Mod):
        return True
    if isinstance(term, Pow):
        return contains_mod(term.base) or contains_mod(term.exp)
    return contains_mod(term.left) or contains_mod(term.right)
