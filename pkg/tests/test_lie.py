import random

import pytest
from hypothesis import given, settings

from freelie.hall import basis_of_degree, generate_basis, parse_monomial
from freelie.lie import (
    DegreeCapError,
    FreeLieAlgebra,
    MalformedTreeError,
    ad_power,
    ad_preimage,
    add,
    bracket,
    caching,
    homogeneous_components,
    left_normed,
    normal_form,
    poly_action,
    scalar_mul,
    truncate,
)
from freelie.scalars import GF, QQ, FieldMismatchError, Polynomial, parse_polynomial

from helpers import elements, random_element, random_poly
from oracles import all_trees, assoc_commutator, jacobi_expand, to_associative

L3 = FreeLieAlgebra(3, QQ)
a, b, c = L3.gens()


def E(text):
    return L3.parse(text)


def test_vector_space_examples():
    u = E("[b,a] + 3*c")
    assert add(u, L3.zero()) == u
    assert add(u, scalar_mul(-1, u)).is_zero()
    assert scalar_mul(2, b + a) == 2 * b + 2 * a
    assert str(scalar_mul(2, b + a)) == "2*b + 2*a"


def test_bracket_examples():
    assert bracket(b, a) == L3.monomial(parse_monomial("[b,a]", 3))
    assert bracket(a, b) == -bracket(b, a)
    ba, ca = E("[b,a]"), E("[c,a]")
    lhs = bracket(ba, ca)
    # [u,[v,w]] = [[u,v],w] - [[u,w],v] with u = [b,a], v = c, w = a
    assert lhs == bracket(bracket(ba, c), a) - bracket(bracket(ba, a), c)
    assert to_associative(lhs) == assoc_commutator(to_associative(ba), to_associative(ca))


def test_normal_form_examples():
    assert normal_form(("a", "a"), L3).is_zero()
    assert normal_form(("a", ("b", "a")), L3) == -E("[[b,a],a]")
    cb_a = normal_form(parse_monomial("[[c,b],a]", 3), L3)
    # by hand: [[c,b],a] = [[c,a],b] + [c,[b,a]] = [[c,a],b] - [[b,a],c]
    assert cb_a == E("[[c,a],b]") - E("[[b,a],c]")
    weighted = normal_form([(2, ("b", "a")), (-1, "c")], L3)
    assert weighted == 2 * E("[b,a]") - c


def test_normal_form_errors():
    for bad in [("a",), "d", 7, [("a",)], 3.5]:
        with pytest.raises(MalformedTreeError):
            normal_form(bad, L3)


@pytest.mark.parametrize("degree", [2, 3, 4, 5])
def test_normal_form_of_every_tree_matches_associative_oracle(degree):
    for tree in all_trees(3, degree):
        assert to_associative(normal_form(tree, L3)) == jacobi_expand(tree, L3)


def test_left_normed_and_ad_power():
    assert left_normed(b) == b
    assert left_normed(b, a, a) == bracket(bracket(b, a), a)
    bab = left_normed(b, a, b)
    assert list(bab.terms) == [parse_monomial("[[b,a],b]", 3)]
    assert ad_power(b, "a", 0) == b
    assert ad_power(b, a, 2) == E("[[b,a],a]")
    assert ad_power(a, a, 1).is_zero()
    with pytest.raises(ValueError):
        left_normed()


def test_poly_action_examples():
    f = parse_polynomial("t^2+1")
    assert poly_action(b, f, a) == left_normed(b, a, a) + b
    assert poly_action(E("[c,b]"), Polynomial([]), a).is_zero()


def test_poly_action_is_module_action():
    rng = random.Random(3)
    for _ in range(20):
        f, g = random_poly(rng, QQ, 3), random_poly(rng, QQ, 3)
        assert poly_action(b, f * g, a) == poly_action(poly_action(b, f, a), g, a)
        assert poly_action(b, f + g, a) == poly_action(b, f, a) + poly_action(b, g, a)


def test_homogeneous_components_examples():
    u = b + E("[b,a]")
    parts = homogeneous_components(u)
    assert set(parts) == {(0, 1, 0), (1, 1, 0)}
    h = E("[c,a]")
    assert homogeneous_components(h) == {(1, 0, 1): h}
    v = bracket(b + a, c)
    assert sum(homogeneous_components(v).values(), L3.zero()) == v


def test_truncate_examples():
    assert truncate(b + E("[b,a,a]"), 2) == b
    u = E("[c,b] + a")
    assert truncate(u, 2) == u
    rng = random.Random(4)
    for _ in range(20):
        x, y = random_element(rng, L3, 5), random_element(rng, L3, 5)
        assert truncate(x + 3 * y, 3) == truncate(x, 3) + 3 * truncate(y, 3)


def test_degree_cap():
    small = FreeLieAlgebra(3, QQ, degree_cap=5)
    x = ad_power(small.gen(1), "a", 3)
    with pytest.raises(DegreeCapError):
        bracket(x, ad_power(small.gen(2), "a", 1))


def test_field_mismatch():
    Lp = FreeLieAlgebra(3, GF(5))
    with pytest.raises(FieldMismatchError):
        bracket(a, Lp.gen(1))
    with pytest.raises(FieldMismatchError):
        a + Lp.gen(1)
    with pytest.raises(FieldMismatchError):
        poly_action(b, Polynomial([1], GF(5)), a)


def test_printing_round_trip():
    rng = random.Random(5)
    for _ in range(30):
        u = random_element(rng, L3, 5)
        assert L3.parse(str(u)) == u
    assert str(E("[a,b]")) == "-1*[b,a]"
    assert str(L3.zero()) == "0"


def test_structure_constant_table_agrees_with_bracket():
    # table built with the product cache disabled, then compared on
    # random bilinear combinations computed with the cache on
    basis = generate_basis(3, 3)
    with caching(False):
        table = {
            (e, f): bracket(L3.monomial(e), L3.monomial(f))
            for e in basis
            for f in basis
        }
    rng = random.Random(6)
    for _ in range(100):
        x = random_element(rng, L3, 3)
        y = random_element(rng, L3, 3)
        expect = L3.zero()
        for e, cx in x.terms.items():
            for f, cy in y.terms.items():
                expect = expect + table[(e, f)] * (cx * cy)
        assert bracket(x, y) == expect


def test_bracket_matches_associative_oracle_on_basis_pairs():
    basis = generate_basis(3, 4)
    for e in basis:
        for f in basis:
            if e.degree + f.degree > 6:
                continue
            prod = bracket(L3.monomial(e), L3.monomial(f))
            expect = assoc_commutator(to_associative(L3.monomial(e)), to_associative(L3.monomial(f)))
            assert to_associative(prod) == expect


@settings(max_examples=60, deadline=None)
@given(elements(L3, 4), elements(L3, 4), elements(L3, 4))
def test_lie_axioms(u, v, w):
    assert bracket(u, u).is_zero()
    assert (bracket(u, v) + bracket(v, u)).is_zero()
    jac = bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v)
    assert jac.is_zero()
    assert bracket(u, bracket(v, w)) == bracket(bracket(u, v), w) - bracket(bracket(u, w), v)


@settings(max_examples=40, deadline=None)
@given(elements(L3, 3, 3), elements(L3, 3, 3))
def test_bilinearity(u, v):
    assert bracket(u + v, c) == bracket(u, c) + bracket(v, c)
    assert bracket(3 * u, v) == 3 * bracket(u, v)


def test_grading_of_homogeneous_brackets():
    rng = random.Random(7)
    for _ in range(40):
        e = rng.choice(generate_basis(3, 4))
        f = rng.choice(generate_basis(3, 4))
        prod = bracket(L3.monomial(e), L3.monomial(f))
        expected = tuple(x + y for x, y in zip(e.multidegree, f.multidegree))
        assert all(m.multidegree == expected for m in prod.terms)


@pytest.mark.parametrize("field", [QQ, GF(5)], ids=["QQ", "GF5"])
def test_polynomial_action_is_faithful(field):
    L = FreeLieAlgebra(3, field)
    rng = random.Random(8)
    for _ in range(50):
        f = random_poly(rng, field, 10, nonzero=True)
        assert poly_action(L.gen(1), f, "a")
    assert poly_action(L.gen(1), Polynomial([], field), "a").is_zero()


def test_ad_preimage():
    s = E("[c,b] + 2*[[b,a],c]")
    assert bracket(ad_preimage(bracket(s, a), a), a) == bracket(s, a)
    assert ad_preimage(E("[c,b]"), a) is None
    assert ad_preimage(b, a) is None
    assert ad_preimage(L3.zero(), a).is_zero()


def test_cache_is_pure():
    x, y = E("[[c,a],b] + [b,a]"), E("[[b,a],a] - 2*c")
    with caching(False):
        uncached = bracket(bracket(x, y), x)
    assert bracket(bracket(x, y), x) == uncached


def test_homogeneous_element_count():
    assert len(basis_of_degree(3, 4)) == 18
