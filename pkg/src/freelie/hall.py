"""Hall basis of a free Lie algebra on an ordered set of generators.

Generators are numbered ``0, 1, 2, ...`` and named ``a, b, c, a1, a2, ...``;
the order is the numbering, so ``a < b < c``.  Bracket trees are interned, so
two structurally equal trees over the same generator set are the same object.

Order on trees: higher degree is greater; leaves compare by generator index;
trees of equal degree compare lexicographically by ``(left, right)``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product

__all__ = [
    "Monomial",
    "generator",
    "generator_name",
    "generator_index",
    "hall_compare",
    "is_hall",
    "generate_basis",
    "basis_of_degree",
    "basis_of_multidegree",
    "witt_dimension",
    "parse_monomial",
]


def generator_name(i: int) -> str:
    if i < 3:
        return "abc"[i]
    return f"a{i - 2}"


_GEN_RE = re.compile(r"^(?:([abc])|a([1-9]\d*))$")


def generator_index(name: str) -> int | None:
    """Index of a generator name, or ``None`` if ``name`` is not one."""
    m = _GEN_RE.match(name)
    if not m:
        return None
    if m.group(1):
        return "abc".index(m.group(1))
    return int(m.group(2)) + 2


class Monomial:
    """A binary bracket tree over generators ``0 .. rank-1``.

    Use :func:`generator` and :meth:`Monomial.node` (or ``Monomial.bracket``)
    to build trees; the constructor is not public.  A tree need not satisfy
    the Hall conditions; see :func:`is_hall`.
    """

    __slots__ = ("rank", "index", "left", "right", "degree", "multidegree", "key", "_hash", "__weakref__")

    _interned: dict = {}

    @classmethod
    def leaf(cls, index: int, rank: int) -> Monomial:
        if not 0 <= index < rank:
            raise ValueError(f"generator index {index} out of range for rank {rank}")
        ident = (rank, index)
        obj = cls._interned.get(ident)
        if obj is None:
            obj = object.__new__(cls)
            obj.rank = rank
            obj.index = index
            obj.left = obj.right = None
            obj.degree = 1
            md = [0] * rank
            md[index] = 1
            obj.multidegree = tuple(md)
            obj.key = (1, index)
            obj._hash = hash(ident)
            cls._interned[ident] = obj
        return obj

    @classmethod
    def node(cls, left: Monomial, right: Monomial) -> Monomial:
        if left.rank != right.rank:
            raise ValueError("cannot bracket monomials over different generator sets")
        ident = (left, right)
        obj = cls._interned.get(ident)
        if obj is None:
            obj = object.__new__(cls)
            obj.rank = left.rank
            obj.index = None
            obj.left = left
            obj.right = right
            obj.degree = left.degree + right.degree
            obj.multidegree = tuple(x + y for x, y in zip(left.multidegree, right.multidegree))
            obj.key = (obj.degree, left.key, right.key)
            obj._hash = hash((left._hash, right._hash))
            cls._interned[ident] = obj
        return obj

    @property
    def is_leaf(self) -> bool:
        return self.index is not None

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __lt__(self, other: Monomial):
        return self.key < other.key

    def __le__(self, other: Monomial):
        return self is other or self.key < other.key

    def __gt__(self, other: Monomial):
        return self.key > other.key

    def __ge__(self, other: Monomial):
        return self is other or self.key > other.key

    def __reduce__(self):
        if self.is_leaf:
            return (Monomial.leaf, (self.index, self.rank))
        return (Monomial.node, (self.left, self.right))

    def __str__(self):
        if self.is_leaf:
            return generator_name(self.index)
        return f"[{self.left},{self.right}]"

    def __repr__(self):
        return f"Monomial({self})"

    def leaves(self):
        if self.is_leaf:
            yield self.index
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()


def generator(index: int, rank: int) -> Monomial:
    return Monomial.leaf(index, rank)


def hall_compare(e: Monomial, f: Monomial) -> int:
    """Sign of ``e - f`` in Hall order: -1 if ``e`` comes first, 1 if ``f`` does."""
    if e is f:
        return 0
    return -1 if e.key < f.key else 1


def is_hall(t: Monomial) -> bool:
    """Check the Hall conditions recursively at every node of ``t``."""
    if t.is_leaf:
        return True
    e, f = t.left, t.right
    if not (e > f):
        return False
    if not e.is_leaf and e.right > f:
        return False
    return is_hall(e) and is_hall(f)


def _hall_pair(e: Monomial, f: Monomial) -> bool:
    # both factors already known to be Hall
    return e > f and (e.is_leaf or e.right <= f)


@lru_cache(maxsize=None)
def basis_of_degree(rank: int, degree: int) -> tuple[Monomial, ...]:
    """The Hall monomials of exactly ``degree``, in increasing order."""
    if rank < 1 or degree < 1:
        raise ValueError("rank and degree must be positive")
    if degree == 1:
        return tuple(Monomial.leaf(i, rank) for i in range(rank))
    out = []
    for de in range(1, degree):
        for e in basis_of_degree(rank, de):
            for f in basis_of_degree(rank, degree - de):
                if _hall_pair(e, f):
                    out.append(Monomial.node(e, f))
    out.sort(key=lambda m: m.key)
    return tuple(out)


def generate_basis(rank: int, max_degree: int) -> list[Monomial]:
    """All Hall monomials of degree at most ``max_degree``, in increasing order."""
    if rank < 2:
        raise ValueError("rank must be at least 2")
    out: list[Monomial] = []
    for n in range(1, max_degree + 1):
        out.extend(basis_of_degree(rank, n))
    return out


@lru_cache(maxsize=None)
def basis_of_multidegree(multidegree: tuple[int, ...]) -> tuple[Monomial, ...]:
    """The Hall monomials with the given per-generator degrees, increasing."""
    rank = len(multidegree)
    total = sum(multidegree)
    if total == 0 or min(multidegree) < 0:
        return ()
    if total == 1:
        return (Monomial.leaf(multidegree.index(1), rank),)
    out = []
    for part in product(*(range(k + 1) for k in multidegree)):
        rest = tuple(k - p for k, p in zip(multidegree, part))
        if not any(part) or not any(rest):
            continue
        for e in basis_of_multidegree(part):
            for f in basis_of_multidegree(rest):
                if _hall_pair(e, f):
                    out.append(Monomial.node(e, f))
    out.sort(key=lambda m: m.key)
    return tuple(out)


def _mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(rank: int, n: int) -> int:
    """Dimension of the degree-``n`` component of the free Lie algebra of given rank."""
    total = sum(_mobius(d) * rank ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def parse_monomial(text: str, rank: int) -> Monomial:
    """Parse a nested bracket tree such as ``[[b,a],b]``.

    The tree is returned as written; it is not normalised.
    """
    text = text.replace(" ", "")
    pos = 0

    def parse():
        nonlocal pos
        if pos < len(text) and text[pos] == "[":
            pos += 1
            left = parse()
            if pos >= len(text) or text[pos] != ",":
                raise ValueError(f"expected ',' in {text!r}")
            pos += 1
            right = parse()
            if pos >= len(text) or text[pos] != "]":
                raise ValueError(f"expected ']' in {text!r}")
            pos += 1
            return Monomial.node(left, right)
        m = re.compile(r"[a-z]\d*").match(text, pos)
        if not m:
            raise ValueError(f"bad monomial syntax in {text!r}")
        pos = m.end()
        idx = generator_index(m.group())
        if idx is None:
            raise ValueError(f"{m.group()!r} is not a generator")
        return Monomial.leaf(idx, rank)

    tree = parse()
    if pos != len(text):
        raise ValueError(f"trailing input in {text!r}")
    return tree
