"""Text syntax for terms: tokenizer, precedence-climbing parser, and a
minimally parenthesizing pretty printer.

Grammar: decimal literals of any length, identifiers, the binary operators
``+ - * / % ^`` and parentheses.  ``+`` and ``-`` bind loosest, then
``* / %``, then ``^``; ``^`` is right-associative, the rest associate left.
``-`` always means truncated subtraction, so there is no negation and no
negative literal.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .errors import GcdLabError
from .terms import Add, Const, FloorDiv, Mod, Monus, Mul, Pow, Term, Var

_DIGITS = set(string.digits)
_IDENT_START = set(string.ascii_letters + "_")
_IDENT_REST = _IDENT_START | _DIGITS
_SPACE = set(" \t\r\n")

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "%": 2, "^": 3}
_NODE = {"+": Add, "-": Monus, "*": Mul, "/": FloorDiv, "%": Mod, "^": Pow}


@dataclass(frozen=True)
class SourceSpan:
    """Half-open offset range [start, end) into the input text."""

    start: int
    end: int


class ParseError(GcdLabError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} (at {span.start}..{span.end})")
        self.message = message
        self.span = span


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "ident", "op", "lparen", "rparen"
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in _SPACE:
            i += 1
            continue
        if ch in _DIGITS:
            j = i + 1
            while j < n and text[j] in _DIGITS:
                j += 1
            tokens.append(_Token("num", text[i:j], i, j))
            i = j
            continue
        if ch in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_REST:
                j += 1
            tokens.append(_Token("ident", text[i:j], i, j))
            i = j
            continue
        if ch in _PRECEDENCE:
            tokens.append(_Token("op", ch, i, i + 1))
            i += 1
            continue
        if ch == "(":
            tokens.append(_Token("lparen", ch, i, i + 1))
            i += 1
            continue
        if ch == ")":
            tokens.append(_Token("rparen", ch, i, i + 1))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", SourceSpan(i, i + 1))
    return tokens


def parse_term(text: str) -> Term:
    """Parse source text into a term, or raise ParseError with a span."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input", SourceSpan(0, len(text)))
    term, pos = _parse_expr(tokens, 0, 1, len(text))
    if pos != len(tokens):
        tok = tokens[pos]
        if tok.kind == "rparen":
            raise ParseError("unbalanced parenthesis", SourceSpan(tok.start, tok.end))
        raise ParseError(f"unexpected token {tok.text!r}", SourceSpan(tok.start, tok.end))
    return term


def _parse_expr(tokens: list[_Token], pos: int, min_prec: int, end: int) -> tuple[Term, int]:
    node, pos = _parse_atom(tokens, pos, end)
    while pos < len(tokens) and tokens[pos].kind == "op":
        op = tokens[pos].text
        prec = _PRECEDENCE[op]
        if prec < min_prec:
            break
        pos += 1
        # right-associative ^ reenters at its own level, the rest one above
        next_min = prec if op == "^" else prec + 1
        rhs, pos = _parse_expr(tokens, pos, next_min, end)
        node = _NODE[op](node, rhs)
    return node, pos


def _parse_atom(tokens: list[_Token], pos: int, end: int) -> tuple[Term, int]:
    if pos >= len(tokens):
        raise ParseError("unexpected end of input", SourceSpan(end, end))
    tok = tokens[pos]
    if tok.kind == "num":
        return Const(int(tok.text)), pos + 1
    if tok.kind == "ident":
        return Var(tok.text), pos + 1
    if tok.kind == "lparen":
        node, after = _parse_expr(tokens, pos + 1, 1, end)
        if after >= len(tokens) or tokens[after].kind != "rparen":
            raise ParseError("unbalanced parenthesis", SourceSpan(tok.start, tok.end))
        return node, after + 1
    raise ParseError(f"unexpected token {tok.text!r}", SourceSpan(tok.start, tok.end))


_LEVEL = {Add: 1, Monus: 1, Mul: 2, FloorDiv: 2, Mod: 2, Pow: 3}
_SYMBOL = {Add: "+", Monus: "-", Mul: "*", FloorDiv: "/", Mod: "%", Pow: "^"}
_ATOM_LEVEL = 9


def pretty_print(term: Term) -> str:
    """Render with the fewest parentheses that still parse back to this tree."""
    text, _ = _render(term)
    return text


def _render(term: Term) -> tuple[str, int]:
    if isinstance(term, Const):
        return str(term.value), _ATOM_LEVEL
    if isinstance(term, Var):
        return term.name, _ATOM_LEVEL
    level = _LEVEL[type(term)]
    if isinstance(term, Pow):
        left_child, right_child = term.base, term.exp
    else:
        left_child, right_child = term.left, term.right
    left, left_level = _render(left_child)
    right, right_level = _render(right_child)
    if isinstance(term, Pow):
        need_left, need_right = left_level <= level, right_level < level
    else:
        need_left, need_right = left_level < level, right_level <= level
    if need_left:
        left = f"({left})"
    if need_right:
        right = f"({right})"
    symbol = _SYMBOL[type(term)]
    joint = f" {symbol} " if level == 1 else symbol
    return f"{left}{joint}{right}", level
