"""Exact coefficient fields and dense univariate polynomials.

Two fields are supported: the rationals ``QQ`` (elements are plain
:class:`fractions.Fraction` values) and prime fields ``GF(p)`` (elements are
:class:`FpElement`).  Both support the ordinary arithmetic operators, so the
rest of the package manipulates coefficients without caring which field it is
working over.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest


class FieldMismatchError(TypeError):
    """Raised when values from two different fields are combined."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """An element of the prime field with ``p`` elements."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        raise FieldMismatchError(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        return FpElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FpElement(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return FpElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> FpElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        other = FpElement(self._coerce(other), self.p)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FpElement(self._coerce(other), self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(pow(self.value, n, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Base class for coefficient fields.

    Calling a field converts ints, strings and (for ``QQ``) fractions into
    field elements.
    """

    characteristic: int

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, value) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        """Parse ``"3"``, ``"-7"`` or ``"p/q"``."""
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self(int(num)) / self(int(den))
        return self(int(text))

    def format(self, value) -> str:
        return str(value)


class RationalField(Field):
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, FpElement):
            raise FieldMismatchError("cannot convert a GF(p) element to QQ")
        if isinstance(value, str):
            return Fraction(value.replace(" ", ""))
        return Fraction(value)

    def contains(self, value) -> bool:
        return isinstance(value, Fraction)

    def spec(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) element given to GF({self.p})")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return FpElement(value.numerator, self.p) / FpElement(value.denominator, self.p)
        return FpElement(int(value), self.p)

    def contains(self, value) -> bool:
        return isinstance(value, FpElement) and value.p == self.p

    def spec(self) -> str:
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """``"q"`` gives ``QQ``; ``"fp:P"`` gives ``GF(P)``."""
    spec = spec.strip().lower()
    if spec in ("q", "qq"):
        return QQ
    if spec.startswith("fp:"):
        return GF(int(spec[3:]))
    raise ValueError(f"unknown field {spec!r}; expected 'q' or 'fp:P'")


def field_of(value) -> Field:
    if isinstance(value, FpElement):
        return GF(value.p)
    return QQ


class Polynomial:
    """Dense polynomial in ``t`` over a field, stored without trailing zeros.

    ``coeffs[i]`` is the coefficient of ``t**i``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs=(), field: Field = QQ):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def monomial(cls, n: int, field: Field = QQ, coeff=1) -> Polynomial:
        return cls([0] * n + [coeff], field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> Polynomial:
        return cls([c], field)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _check(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial([other], self.field)
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        zero = self.field.zero
        return Polynomial(
            [x + y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=zero)], self.field
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial([1], self.field)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            return self == self._check(other)
        except (FieldMismatchError, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __call__(self, x):
        result = self.field.zero
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def even_expand(self) -> Polynomial:
        """Return ``g`` with ``g(t) = f(t**2)``."""
        out = []
        for c in self.coeffs:
            out.extend((c, 0))
        return Polynomial(out[:-1], self.field)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, {self.field!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            text = self.field.format(c)
            neg = text.startswith("-")
            if neg:
                text = text[1:]
            if i == 0:
                body = text
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if text == "1" else f"{text}*{power}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def even_expand(f: Polynomial) -> Polynomial:
    return f.even_expand()


_POLY_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(t)|(\^)|([-+*()]))")


def parse_polynomial(text: str, field: Field = QQ) -> Polynomial:
    """Parse text such as ``"3*t^2 + 1/2*t - 4"`` or ``"(t+1)*(t-1)"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax at {text[pos:]!r}")
        pos = m.end()
        tokens.append(next(g for g in m.groups() if g is not None))
    tokens.append(None)
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        if peek() in ("+", "-"):
            sign = take()
            result = term()
            if sign == "-":
                result = -result
        else:
            result = term()
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term():
        result = factor()
        while peek() == "*":
            take()
            result = result * factor()
        return result

    def factor():
        base = atom()
        if peek() == "^":
            take()
            tok = take()
            if tok is None or not tok.isdigit():
                raise ValueError(f"bad exponent in {text!r}")
            base = base ** int(tok)
        return base

    def atom():
        tok = take()
        if tok is None:
            raise ValueError(f"unexpected end of {text!r}")
        if tok == "t":
            return Polynomial([0, 1], field)
        if tok == "(":
            inner = expr()
            if take() != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        if tok == "-":
            return -atom()
        if tok[0].isdigit():
            return Polynomial([field.parse(tok)], field)
        raise ValueError(f"unexpected {tok!r} in {text!r}")

    result = expr()
    if peek() is not None:
        raise ValueError(f"trailing input in {text!r}")
    return result
