"""Lie terms with variables, and their text grammar.

Grammar (whitespace ignored)::

    expr   := signed (('+' | '-') signed)*
    signed := '-'? scaled
    scaled := scalar '*' scaled | atom
    atom   := gen | var | '[' expr ',' expr ']' | '(' expr ')' | '0'

Generator names (``a``, ``b``, ``c``, ``a1``, ...) that exist in the algebra
are constants; any other identifier is a variable.  A bracket ``[x, y, z]``
with more than two entries is read left-normed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .hall import generator_index
from .lie import FreeLieAlgebra, LieElement, bracket

__all__ = [
    "Var",
    "Const",
    "Bracket",
    "Sum",
    "Scale",
    "LieTerm",
    "UnboundVariableError",
    "NonlinearTermError",
    "parse_term",
    "format_term",
    "evaluate",
    "variables_of",
    "variable_degree",
]


class UnboundVariableError(KeyError):
    pass


class NonlinearTermError(ValueError):
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: LieElement


@dataclass(frozen=True)
class Bracket:
    left: "LieTerm"
    right: "LieTerm"


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Scale:
    scalar: object
    term: "LieTerm"


LieTerm = Union[Var, Const, Bracket, Sum, Scale]


def evaluate(t: LieTerm, assignment) -> LieElement:
    """Evaluate a term, substituting ``assignment[name]`` for each variable."""
    if isinstance(t, Var):
        try:
            return assignment[t.name]
        except KeyError:
            raise UnboundVariableError(t.name) from None
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Bracket):
        return bracket(evaluate(t.left, assignment), evaluate(t.right, assignment))
    if isinstance(t, Sum):
        vals = [evaluate(s, assignment) for s in t.terms]
        total = vals[0]
        for v in vals[1:]:
            total = total + v
        return total
    if isinstance(t, Scale):
        return evaluate(t.term, assignment) * t.scalar
    raise TypeError(f"not a Lie term: {t!r}")


def variables_of(t: LieTerm) -> list[str]:
    """Variable names in order of first appearance."""
    seen: dict[str, None] = {}

    def walk(node):
        if isinstance(node, Var):
            seen.setdefault(node.name)
        elif isinstance(node, Bracket):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Sum):
            for s in node.terms:
                walk(s)
        elif isinstance(node, Scale):
            walk(node.term)

    walk(t)
    return list(seen)


def variable_degree(t: LieTerm) -> int:
    """Largest number of variable occurrences multiplied together in one summand.

    ``0`` means constant, ``1`` means linear; a bracket of two variable-bearing
    subterms counts as 2 or more.
    """
    if isinstance(t, Var):
        return 1
    if isinstance(t, Const):
        return 0
    if isinstance(t, Bracket):
        return variable_degree(t.left) + variable_degree(t.right)
    if isinstance(t, Sum):
        return max((variable_degree(s) for s in t.terms), default=0)
    if isinstance(t, Scale):
        return variable_degree(t.term)
    raise TypeError(f"not a Lie term: {t!r}")


def format_term(t: LieTerm) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        if not t.value:
            return "0"
        if len(t.value) == 1:
            m, c = next(iter(t.value))
            if c == 1:
                return str(m)
        return f"({t.value})"
    if isinstance(t, Bracket):
        return f"[{format_term(t.left)},{format_term(t.right)}]"
    if isinstance(t, Sum):
        if not t.terms:
            return "0"
        parts = [format_term(t.terms[0])]
        for s in t.terms[1:]:
            if isinstance(s, Scale) and s.scalar == -1:
                parts.append(f"- {_wrap(s.term)}")
            else:
                parts.append(f"+ {format_term(s)}")
        return " ".join(parts)
    if isinstance(t, Scale):
        return f"{t.scalar}*{_wrap(t.term)}"
    raise TypeError(f"not a Lie term: {t!r}")


def _wrap(t: LieTerm) -> str:
    text = format_term(t)
    return f"({text})" if isinstance(t, Sum) else text


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|([\[\],()+\-*]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad term syntax at {text[pos:]!r}")
        pos = m.end()
        tokens.append(next(g for g in m.groups() if g is not None))
    return tokens


def parse_term(text: str, algebra: FreeLieAlgebra) -> LieTerm:
    """Parse a term of the grammar in the module docstring.

    Generator names become :class:`Const` leaves of ``algebra``.
    """
    tokens = _tokenize(text) + [None]
    pos = 0
    field = algebra.field

    def peek():
        return tokens[pos]

    def take(expected=None):
        nonlocal pos
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r} but found {tok!r} in {text!r}")
        pos += 1
        return tok

    def expr():
        items = [signed()]
        while peek() in ("+", "-"):
            op = take()
            item = signed()
            items.append(Scale(field(-1), item) if op == "-" else item)
        return items[0] if len(items) == 1 else Sum(tuple(items))

    def signed():
        if peek() == "-":
            take()
            inner = scaled()
            if isinstance(inner, Scale):
                return Scale(-inner.scalar, inner.term)
            return Scale(field(-1), inner)
        return scaled()

    def scaled():
        tok = peek()
        if tok is not None and tok[0].isdigit() and tokens[pos + 1] == "*":
            take()
            take("*")
            inner = scaled()
            value = field.parse(tok)
            if isinstance(inner, Scale):
                return Scale(value * inner.scalar, inner.term)
            return Scale(value, inner)
        return atom()

    def atom():
        tok = take()
        if tok is None:
            raise ValueError(f"unexpected end of {text!r}")
        if tok == "[":
            parts = [expr()]
            while peek() == ",":
                take()
                parts.append(expr())
            take("]")
            if len(parts) < 2:
                raise ValueError(f"bracket needs two entries in {text!r}")
            result = parts[0]
            for p in parts[1:]:
                result = Bracket(result, p)
            return result
        if tok == "(":
            inner = expr()
            take(")")
            return inner
        if tok == "0":
            return Const(algebra.zero())
        if tok[0].isdigit():
            # bare scalar: only zero is meaningful in a Lie algebra
            if field.parse(tok):
                raise ValueError(f"bare scalar {tok!r} is not a Lie element in {text!r}")
            return Const(algebra.zero())
        if tok[0].isalpha() or tok[0] == "_":
            idx = generator_index(tok)
            if idx is not None and idx < algebra.rank:
                return Const(algebra.gen(idx))
            return Var(tok)
        raise ValueError(f"unexpected {tok!r} in {text!r}")

    result = expr()
    if peek() is not None:
        raise ValueError(f"trailing input {peek()!r} in {text!r}")
    return result

