"""Equational encodings of the field ``K`` and of ``K[t]`` inside a free Lie algebra.

Field layer (rank >= 2): ``alpha`` is coded by the tuple
``(alpha*a_1, ..., alpha*a_n)``; addition, multiplication and the scalar
action are checked by bracket equations against the generators.

Polynomial layer (rank >= 3, anchored at ``a < b < c``): ``f`` in ``K[t]`` is
coded by ``[b, f(a^2)] + alpha*a`` for any ``alpha``.  Two codes are
equivalent when their difference commutes with ``a``.  Membership is cut out
by the linear system::

    [x,c] + [y,b] = [z,a],   [x,b] = [z1,a],   [y,c] = [z2,a]

whose solutions projected to ``(x, y)`` are exactly the pairs
``([b,f(a^2)] + alpha*a, [c,f(a^2)] + beta*a)``.
"""

from __future__ import annotations

from .hall import Monomial
from .lie import (
    FreeLieAlgebra,
    LieElement,
    ad_power,
    ad_preimage,
    bracket,
    poly_action,
)
from .scalars import Polynomial

__all__ = [
    "NotAFieldCodeError",
    "NotInXError",
    "WitnessError",
    "in_A",
    "in_A0",
    "encode_field",
    "decode_field",
    "check_field_add",
    "check_field_mul",
    "check_scalar_action",
    "encode_poly",
    "decode_poly",
    "in_X",
    "psi_partner",
    "equiv",
    "congruent_mod_a",
    "witness_s",
    "witness_t",
    "check_phi",
    "psi_witness",
    "oplus",
    "check_oplus",
    "otimes",
    "otimes_check",
    "otimes_witness",
]


class NotAFieldCodeError(ValueError):
    """A tuple that fails the membership equations for coded scalars."""


class NotInXError(ValueError):
    """An element outside ``{[b, f(a^2)] + alpha*a}``."""


class WitnessError(AssertionError):
    """A constructed witness failed its own exact verification."""


def _require_rank(L: FreeLieAlgebra, n: int) -> None:
    if L.rank < n:
        raise ValueError(f"this construction needs rank >= {n}, got {L.rank}")


# -- the field K inside L ------------------------------------------------------


def in_A(ys) -> bool:
    """``[y_i, a_i] = 0`` for every ``i``."""
    L = ys[0].algebra
    if len(ys) != L.rank:
        return False
    return all(not bracket(y, g) for y, g in zip(ys, L.gens()))


def in_A0(ys) -> bool:
    """Membership in ``A`` plus ``[y_i, a_j] = [a_i, y_j]`` for all ``i, j``."""
    if not in_A(ys):
        return False
    gens = ys[0].algebra.gens()
    return all(
        bracket(yi, aj) == bracket(ai, yj)
        for yi, ai in zip(ys, gens)
        for yj, aj in zip(ys, gens)
    )


def _require_A0(*codes) -> None:
    for ys in codes:
        if not in_A0(ys):
            raise NotAFieldCodeError(f"not a coded scalar: {tuple(str(y) for y in ys)}")


def encode_field(L: FreeLieAlgebra, alpha) -> tuple[LieElement, ...]:
    _require_rank(L, 2)
    alpha = L.field(alpha)
    return tuple(g * alpha for g in L.gens())


def decode_field(ys) -> object:
    _require_A0(ys)
    L = ys[0].algebra
    return ys[0].coefficient(Monomial.leaf(0, L.rank))


def check_field_add(xs, ys, zs) -> bool:
    _require_A0(xs, ys, zs)
    return all(x + y == z for x, y, z in zip(xs, ys, zs))


def check_field_mul(xs, ys, zs) -> bool:
    _require_A0(xs, ys, zs)
    gens = xs[0].algebra.gens()
    return all(
        bracket(xi, yj) == bracket(zi, aj)
        for xi, zi in zip(xs, zs)
        for yj, aj in zip(ys, gens)
    )


def check_scalar_action(x: LieElement, ys, z: LieElement) -> bool:
    """``[z, a_i] = [x, y_i]`` for all ``i``; equivalent to ``z = decode(ys) * x``."""
    _require_A0(ys)
    return all(bracket(z, g) == bracket(x, y) for g, y in zip(x.algebra.gens(), ys))


# -- the polynomial ring K[t] inside L ------------------------------------------


def encode_poly(L: FreeLieAlgebra, f: Polynomial, alpha=0) -> LieElement:
    """``[b, f(a^2)] + alpha*a``."""
    _require_rank(L, 3)
    a, b = L.gen(0), L.gen(1)
    return poly_action(b, f.even_expand(), a) + a * alpha


def psi_partner(L: FreeLieAlgebra, f: Polynomial, beta=0) -> LieElement:
    """``[c, f(a^2)] + beta*a``, the second coordinate paired with ``encode_poly(f)``."""
    _require_rank(L, 3)
    a, c = L.gen(0), L.gen(2)
    return poly_action(c, f.even_expand(), a) + a * beta


def decode_poly(u: LieElement) -> tuple[Polynomial, object]:
    """Inverse of :func:`encode_poly`, reading Hall coordinates directly."""
    L = u.algebra
    _require_rank(L, 3)
    a = Monomial.leaf(0, L.rank)
    coeffs = {}
    for m, c in u.terms.items():
        if m is a:
            continue
        k = _chain_length(m, 1)
        if k is None or k % 2:
            raise NotInXError(f"term {m} is not a or [b,a^(2k)]")
        coeffs[k // 2] = c
    top = max(coeffs, default=-1)
    f = Polynomial([coeffs.get(i, 0) for i in range(top + 1)], L.field)
    return f, u.coefficient(a)


def _chain_length(m: Monomial, base: int) -> int | None:
    """``k`` if ``m`` is ``[g, a^(k)]`` with ``g`` the generator ``base``."""
    k = 0
    while not m.is_leaf:
        if not (m.right.is_leaf and m.right.index == 0):
            return None
        m = m.left
        k += 1
    return k if m.index == base else None


def in_X(u: LieElement) -> bool:
    try:
        decode_poly(u)
    except NotInXError:
        return False
    return True


def equiv(u: LieElement, v: LieElement) -> bool:
    """``[u - v, a] = 0``."""
    return not bracket(u - v, u.algebra.gen(0))


def congruent_mod_a(u: LieElement, v: LieElement) -> bool:
    """``u - v`` lies in ``[L, a]``, the image of right bracketing by ``a``."""
    return ad_preimage(u - v, u.algebra.gen(0)) is not None


# -- witnesses -----------------------------------------------------------------


def _witness_s(r: LieElement, m: int, n: int, q: LieElement) -> LieElement:
    L = r.algebra
    a = L.gen(0)
    s = L.zero()
    # unrolled induction on n; each step shifts m by 2 and n by -1
    while n > 0:
        rm = ad_power(r, a, m)
        s = s + bracket(rm, ad_power(q, a, 2 * n - 1)) - bracket(
            bracket(rm, a), ad_power(q, a, 2 * n - 2)
        )
        m += 2
        n -= 1
    return s


def witness_s(r: LieElement, m: int, n: int, partner: LieElement | None = None) -> LieElement:
    """``s`` with ``[[r,a^(m)], [q,a^(2n)]] = [[r,a^(m+2n)], q] + [s, a]``.

    ``q`` is ``partner``, by default the generator ``b``.  The result is
    checked by normal form before it is returned.
    """
    L = r.algebra
    a = L.gen(0)
    q = L.gen(1) if partner is None else partner
    s = _witness_s(r, m, n, q)
    lhs = bracket(ad_power(r, a, m), ad_power(q, a, 2 * n))
    rhs = bracket(ad_power(r, a, m + 2 * n), q) + bracket(s, a)
    if lhs != rhs:
        raise WitnessError(f"witness_s failed for r={r}, m={m}, n={n}")
    return s


def witness_t(r: LieElement, m: int, n: int, partner: LieElement | None = None) -> LieElement:
    """``t`` with ``[[r,a^(m)], [q,a^(2n+1)]] = -[[r,a^(m+2n+1)], q] + [t, a]``."""
    L = r.algebra
    a = L.gen(0)
    q = L.gen(1) if partner is None else partner
    # [u,[v,a]] = [[u,v],a] - [[u,a],v] with u = [r,a^(m)], v = [q,a^(2n)]
    t = bracket(ad_power(r, a, m), ad_power(q, a, 2 * n)) - _witness_s(r, m + 1, n, q)
    lhs = bracket(ad_power(r, a, m), ad_power(q, a, 2 * n + 1))
    rhs = bracket(t, a) - bracket(ad_power(r, a, m + 2 * n + 1), q)
    if lhs != rhs:
        raise WitnessError(f"witness_t failed for r={r}, m={m}, n={n}")
    return t


def check_phi(x, y, z, z1, z2) -> bool:
    L = x.algebra
    _require_rank(L, 3)
    a, b, c = L.gen(0), L.gen(1), L.gen(2)
    return (
        bracket(x, c) + bracket(y, b) == bracket(z, a)
        and bracket(x, b) == bracket(z1, a)
        and bracket(y, c) == bracket(z2, a)
    )


def _self_witness(q: LieElement, n: int) -> LieElement:
    """``w`` with ``[[q,a^(2n)], q] = [w, a]``, from ``[[q,a^(n)],[q,a^(n)]] = 0``."""
    if n % 2 == 0:
        # 0 = [[q,a^(n)],[q,a^(n)]] = [[q,a^(2n)],q] + [s,a]
        return -witness_s(q, n, n // 2, partner=q)
    # 0 = -[[q,a^(2n)],q] + [t,a]
    return witness_t(q, n, (n - 1) // 2, partner=q)


def psi_witness(
    L: FreeLieAlgebra, f: Polynomial, alpha=0, beta=0, method: str = "recursion"
) -> tuple[LieElement, ...]:
    """A solution ``(x, y, z, z1, z2)`` of the membership system for ``(f, alpha, beta)``.

    ``method="recursion"`` sums the per-monomial witnesses built from
    :func:`witness_s` / :func:`witness_t`; ``method="linear"`` solves for
    ``(z, z1, z2)`` by exact linear algebra at the smallest sufficient degree.
    """
    _require_rank(L, 3)
    a, b, c = L.gen(0), L.gen(1), L.gen(2)
    alpha, beta = L.field(alpha), L.field(beta)
    x = encode_poly(L, f, alpha)
    y = psi_partner(L, f, beta)
    if method == "recursion":
        z = -(c * alpha) - b * beta
        z1 = -(b * alpha)
        z2 = -(c * beta)
        for n, fn in enumerate(f.coeffs):
            if not fn:
                continue
            # [[b,a^(2n)],c] + [[c,a^(2n)],b] = -[v,a], v from the m = 0 case with r = c
            z = z - witness_s(c, 0, n) * fn
            z1 = z1 + _self_witness(b, n) * fn
            z2 = z2 + _self_witness(c, n) * fn
    elif method == "linear":
        from .eqn import phi_system, solve_affine

        degree = max(x.degree, y.degree, 1)
        found = solve_affine(phi_system(L), degree, fixed={"x": x, "y": y})
        if found is None:
            raise WitnessError(f"no truncated solution for f={f}")
        z, z1, z2 = found["z"], found["z1"], found["z2"]
    else:
        raise ValueError(f"unknown method {method!r}")
    if not check_phi(x, y, z, z1, z2):
        raise WitnessError(f"psi_witness failed for f={f}, alpha={alpha}, beta={beta}")
    return x, y, z, z1, z2


# -- operations on codes ---------------------------------------------------------


def _require_X(*us) -> None:
    for u in us:
        if not in_X(u):
            raise NotInXError(f"{u} is not of the form [b,f(a^2)] + alpha*a")


def oplus(u: LieElement, v: LieElement) -> LieElement:
    _require_X(u, v)
    return u + v


def check_oplus(u: LieElement, v: LieElement, w: LieElement) -> bool:
    _require_X(u, v, w)
    return equiv(w, u + v)


def otimes_check(L: FreeLieAlgebra, f: Polynomial, g: Polynomial, h: Polynomial) -> bool:
    """Does ``[[b,f(a^2)], [c,g(a^2)]] - [[b,h(a^2)], c]`` lie in ``[L, a]``?

    True exactly when ``f*g == h``.
    """
    _require_rank(L, 3)
    c = L.gen(2)
    lhs = bracket(encode_poly(L, f), psi_partner(L, g))
    rhs = bracket(encode_poly(L, h), c)
    return congruent_mod_a(lhs, rhs)


def otimes_witness(L: FreeLieAlgebra, f: Polynomial, g: Polynomial) -> LieElement:
    """``s`` with ``[[b,f(a^2)], [c,g(a^2)]] = [[b,(fg)(a^2)], c] + [s, a]``.

    Built by bilinearity from :func:`witness_s` with partner ``c``.
    """
    _require_rank(L, 3)
    b, c = L.gen(1), L.gen(2)
    s = L.zero()
    for i, fi in enumerate(f.coeffs):
        if not fi:
            continue
        for j, gj in enumerate(g.coeffs):
            if gj:
                s = s + witness_s(b, 2 * i, j, partner=c) * (fi * gj)
    return s


def otimes(u: LieElement, v: LieElement) -> LieElement:
    """Code of the product of the classes of ``u`` and ``v``."""
    _require_X(u, v)
    L = u.algebra
    f, _ = decode_poly(u)
    g, _ = decode_poly(v)
    h = f * g
    if not otimes_check(L, f, g, h):
        raise WitnessError(f"product congruence failed for f={f}, g={g}")
    return encode_poly(L, h)

