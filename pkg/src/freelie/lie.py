"""Normal-form arithmetic in a free Lie algebra.

Elements are finite linear combinations of Hall monomials.  Brackets of Hall
monomials are rewritten into the Hall basis with the classical rule::

    [e, f] = 0                        if e == f
           = -[f, e]                  if e < f
           = [e, f]                   if e > f and [e, f] is Hall
           = [[e1, f], e2] + [e1, [e2, f]]   otherwise, e = [e1, e2]

The monomial products have integer coefficients, so they are cached once
for every field.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping
from contextlib import contextmanager

from . import linalg
from .hall import Monomial, basis_of_multidegree, generator_index, generator_name
from .scalars import QQ, Field, FieldMismatchError, Polynomial

__all__ = [
    "FreeLieAlgebra",
    "LieElement",
    "DegreeCapError",
    "MalformedTreeError",
    "add",
    "scalar_mul",
    "bracket",
    "normal_form",
    "left_normed",
    "ad_power",
    "poly_action",
    "homogeneous_components",
    "truncate",
    "ad_preimage",
    "clear_cache",
    "caching",
]

DEFAULT_DEGREE_CAP = 24


class DegreeCapError(ValueError):
    """A product would exceed the algebra's degree cap."""


class MalformedTreeError(ValueError):
    pass


_products: dict[tuple[Monomial, Monomial], tuple[tuple[Monomial, int], ...]] = {}
_use_cache = True


def clear_cache() -> None:
    _products.clear()


@contextmanager
def caching(enabled: bool):
    """Temporarily enable or disable the monomial-product cache."""
    global _use_cache
    old = _use_cache
    _use_cache = enabled
    try:
        yield
    finally:
        _use_cache = old


def _monomial_bracket(e: Monomial, f: Monomial) -> tuple[tuple[Monomial, int], ...]:
    """Hall expansion of ``[e, f]`` for Hall monomials, integer coefficients."""
    if _use_cache:
        hit = _products.get((e, f))
        if hit is not None:
            return hit
    if e is f:
        result = ()
    elif e < f:
        result = tuple((m, -c) for m, c in _monomial_bracket(f, e))
    elif e.index is not None or e.right <= f:
        result = ((Monomial.node(e, f), 1),)
    else:
        e1, e2 = e.left, e.right
        acc: dict[Monomial, int] = defaultdict(int)
        # [[e1, e2], f] = [[e1, f], e2] + [e1, [e2, f]]
        for m, c in _monomial_bracket(e1, f):
            for m2, c2 in _monomial_bracket(m, e2):
                acc[m2] += c * c2
        for m, c in _monomial_bracket(e2, f):
            for m2, c2 in _monomial_bracket(e1, m):
                acc[m2] += c * c2
        result = tuple(sorted(((m, c) for m, c in acc.items() if c), key=lambda mc: mc[0].key))
    if _use_cache:
        _products[(e, f)] = result
    return result


class FreeLieAlgebra:
    """The free Lie algebra on ``rank`` generators ``a, b, c, a1, ...`` over ``field``.

    >>> L = FreeLieAlgebra(3)
    >>> a, b, c = L.gens()
    >>> print(bracket(a, b))
    -1*[b,a]
    """

    def __init__(self, rank: int, field: Field = QQ, degree_cap: int = DEFAULT_DEGREE_CAP):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        self.field = field
        self.degree_cap = degree_cap

    def __eq__(self, other):
        return (
            isinstance(other, FreeLieAlgebra)
            and self.rank == other.rank
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.rank, self.field))

    def __repr__(self):
        return f"FreeLieAlgebra({self.rank}, {self.field!r})"

    def zero(self) -> LieElement:
        return LieElement(self, {})

    def gen(self, which: int | str) -> LieElement:
        if isinstance(which, str):
            idx = generator_index(which)
            if idx is None:
                raise ValueError(f"{which!r} is not a generator name")
        else:
            idx = which
        return self.monomial(Monomial.leaf(idx, self.rank))

    def gens(self) -> tuple[LieElement, ...]:
        return tuple(self.gen(i) for i in range(self.rank))

    def gen_names(self) -> list[str]:
        return [generator_name(i) for i in range(self.rank)]

    def monomial(self, m: Monomial, coeff=1) -> LieElement:
        """The element ``coeff * m`` for a Hall monomial ``m``."""
        if m.rank != self.rank:
            raise ValueError("monomial over a different generator set")
        c = self.field(coeff)
        return LieElement(self, {m: c} if c else {})

    def element(self, terms: Mapping[Monomial, object]) -> LieElement:
        """Build an element from Hall-monomial coordinates."""
        out = {}
        for m, c in terms.items():
            if m.rank != self.rank:
                raise ValueError("monomial over a different generator set")
            c = self.field(c)
            if c:
                out[m] = c
        return LieElement(self, out)

    def scalar(self, value):
        return self.field(value)

    def parse(self, text: str) -> LieElement:
        """Parse a variable-free term such as ``"[a,b] + 1/2*[[b,a],a]"``."""
        from .terms import evaluate, parse_term

        return evaluate(parse_term(text, self), {})

    def __call__(self, value) -> LieElement:
        if isinstance(value, LieElement):
            self._check(value)
            return value
        if isinstance(value, Monomial):
            return normal_form(value, self)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to a Lie element")

    def _check(self, u: LieElement) -> None:
        if u.algebra is not self and u.algebra != self:
            if u.algebra.field != self.field:
                raise FieldMismatchError(f"{u.algebra.field!r} vs {self.field!r}")
            raise ValueError(f"element of {u.algebra!r} used in {self!r}")


class LieElement:
    """A finite linear combination of Hall monomials.

    ``terms`` maps each Hall monomial to its nonzero coefficient; treat it as
    read-only.  Supports vector-space arithmetic; use :func:`bracket` for products.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeLieAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _other(self, other) -> LieElement:
        if not isinstance(other, LieElement):
            if isinstance(other, int) and other == 0:
                return self.algebra.zero()
            raise TypeError(f"cannot combine LieElement with {type(other).__name__}")
        self.algebra._check(other)
        return other

    def __add__(self, other):
        other = self._other(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LieElement(self.algebra, out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return LieElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, alpha):
        if isinstance(alpha, LieElement):
            raise TypeError("use bracket(u, v) for the Lie product")
        alpha = self.algebra.field(alpha)
        if not alpha:
            return self.algebra.zero()
        return LieElement(self.algebra, {m: alpha * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        """Iterate ``(monomial, coefficient)`` in decreasing Hall order."""
        return iter(sorted(self.terms.items(), key=lambda mc: mc[0].key, reverse=True))

    def __len__(self):
        return len(self.terms)

    def coefficient(self, m: Monomial):
        return self.terms.get(m, self.algebra.field.zero)

    @property
    def degree(self) -> int:
        """Largest degree of a term; ``0`` for the zero element."""
        return max((m.degree for m in self.terms), default=0)

    @property
    def min_degree(self) -> int:
        return min((m.degree for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({m.multidegree for m in self.terms}) <= 1

    def bracket(self, other: LieElement) -> LieElement:
        return bracket(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        fmt = self.algebra.field.format
        parts = []
        for m, c in self:
            text = fmt(c)
            if parts:
                if text.startswith("-"):
                    parts.append(f"- {text[1:]}*{m}")
                else:
                    parts.append(f"+ {text}*{m}")
            else:
                parts.append(f"{text}*{m}")
        return " ".join(parts)

    def __repr__(self):
        return f"LieElement({str(self)!r})"


def add(u: LieElement, v: LieElement) -> LieElement:
    return u + v


def scalar_mul(alpha, u: LieElement) -> LieElement:
    return u * alpha


def bracket(u: LieElement, v: LieElement) -> LieElement:
    """Lie product of two elements, in Hall normal form."""
    L = u.algebra
    L._check(v)
    if not u.terms or not v.terms:
        return L.zero()
    if u.degree + v.degree > L.degree_cap:
        raise DegreeCapError(
            f"product degree {u.degree + v.degree} exceeds cap {L.degree_cap}"
        )
    acc: dict = {}
    for e, x in u.terms.items():
        for f, y in v.terms.items():
            xy = x * y
            for m, k in _monomial_bracket(e, f):
                w = acc.get(m)
                acc[m] = xy * k if w is None else w + xy * k
    return LieElement(L, {m: c for m, c in acc.items() if c})


def normal_form(tree, algebra: FreeLieAlgebra) -> LieElement:
    """Evaluate a bracket tree into Hall coordinates.

    ``tree`` may be a :class:`Monomial` (any bracket tree, Hall or not), a
    generator name or index, a :class:`LieElement`, a pair ``(left, right)``
    meaning their bracket, or a list of ``(scalar, subtree)`` pairs meaning a
    weighted sum.
    """
    if isinstance(tree, LieElement):
        algebra._check(tree)
        return tree
    if isinstance(tree, Monomial):
        if tree.rank != algebra.rank:
            raise MalformedTreeError("monomial over a different generator set")
        if tree.is_leaf:
            return algebra.monomial(tree)
        return bracket(normal_form(tree.left, algebra), normal_form(tree.right, algebra))
    if isinstance(tree, str):
        try:
            return algebra.gen(tree)
        except ValueError as exc:
            raise MalformedTreeError(str(exc)) from None
    if isinstance(tree, int) and not isinstance(tree, bool):
        if not 0 <= tree < algebra.rank:
            raise MalformedTreeError(f"generator index {tree} out of range")
        return algebra.gen(tree)
    if isinstance(tree, tuple) and len(tree) == 2:
        return bracket(normal_form(tree[0], algebra), normal_form(tree[1], algebra))
    if isinstance(tree, list):
        total = algebra.zero()
        for item in tree:
            if not (isinstance(item, tuple) and len(item) == 2):
                raise MalformedTreeError(f"weighted sum entries must be (scalar, tree): {item!r}")
            total = total + normal_form(item[1], algebra) * item[0]
        return total
    raise MalformedTreeError(f"cannot interpret {tree!r} as a bracket tree")


def left_normed(*zs: LieElement) -> LieElement:
    """``[z1, z2, ..., zk] = [...[[z1, z2], z3], ..., zk]``."""
    if not zs:
        raise ValueError("left_normed needs at least one element")
    result = zs[0]
    for z in zs[1:]:
        result = bracket(result, z)
    return result


def _as_element(g, algebra: FreeLieAlgebra) -> LieElement:
    if isinstance(g, LieElement):
        return g
    return algebra.gen(g)


def ad_power(u: LieElement, g, n: int) -> LieElement:
    """``[u, g^(n)]``: bracket ``u`` on the right by ``g``, ``n`` times."""
    g = _as_element(g, u.algebra)
    for _ in range(n):
        u = bracket(u, g)
    return u


def poly_action(u: LieElement, f: Polynomial, g="a") -> LieElement:
    """``[u, f(g)] = sum_i f_i [u, g^(i)]``."""
    L = u.algebra
    if f.field != L.field:
        raise FieldMismatchError(f"{f.field!r} vs {L.field!r}")
    g = _as_element(g, L)
    total = L.zero()
    power = u
    for i, c in enumerate(f.coeffs):
        if i:
            power = bracket(power, g)
        if c:
            total = total + power * c
    return total


def homogeneous_components(u: LieElement) -> dict[tuple[int, ...], LieElement]:
    """Split ``u`` by multidegree; the components sum back to ``u``."""
    parts: dict[tuple[int, ...], dict] = defaultdict(dict)
    for m, c in u.terms.items():
        parts[m.multidegree][m] = c
    return {md: LieElement(u.algebra, t) for md, t in sorted(parts.items())}


def truncate(u: LieElement, max_degree: int) -> LieElement:
    """Drop every term of degree greater than ``max_degree``."""
    return LieElement(u.algebra, {m: c for m, c in u.terms.items() if m.degree <= max_degree})


def ad_preimage(u: LieElement, g="a") -> LieElement | None:
    """Some ``s`` with ``[s, g] = u``, or None if ``u`` is not in the image of ad g.

    Works one multidegree at a time, by exact linear algebra over the Hall
    monomials of the matching multidegree.
    """
    L = u.algebra
    g = _as_element(g, L)
    if not g.is_homogeneous():
        raise ValueError("ad_preimage needs a homogeneous right factor")
    if not u:
        return L.zero()
    shift = next(iter(g.terms)).multidegree
    result = L.zero()
    for md, part in homogeneous_components(u).items():
        source = tuple(x - y for x, y in zip(md, shift))
        candidates = basis_of_multidegree(source) if min(source) >= 0 else ()
        images = [bracket(L.monomial(m), g) for m in candidates]
        rows: dict = defaultdict(dict)
        for j, img in enumerate(images):
            for m, c in img.terms.items():
                rows[m][j] = c
        targets = set(rows) | set(part.terms)
        sol = linalg.solve((rows.get(m, {}), part.coefficient(m)) for m in targets)
        if sol is None:
            return None
        result = result + L.element({candidates[j]: c for j, c in sol.items()})
    return result
