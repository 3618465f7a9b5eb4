from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freelie.scalars import (
    GF,
    QQ,
    FieldMismatchError,
    FpElement,
    Polynomial,
    even_expand,
    field_from_spec,
    parse_polynomial,
    poly_add,
    poly_mul,
)

from helpers import fractions

P = parse_polynomial


def test_poly_add_examples():
    assert poly_add(P("t^2+1"), P("-t^2")) == P("1")
    f = P("3*t^2 + 1/2*t - 4")
    assert poly_add(f, Polynomial([])) == f
    assert poly_add(P("t+1"), P("t+1")) == P("2*t+2")
    F2 = GF(2)
    assert poly_add(P("t+1", F2), P("t+1", F2)).is_zero()


def test_poly_mul_examples():
    assert poly_mul(P("t"), P("t")) == P("t^2")
    f = P("1/3*t^3 - t")
    assert poly_mul(f, P("1")) == f
    assert poly_mul(P("t+1"), P("t-1")) == P("t^2-1")


def test_even_expand_examples():
    assert even_expand(P("t")) == P("t^2")
    assert even_expand(P("1")) == P("1")
    assert even_expand(P("t^2+t+1")) == P("t^4+t^2+1")
    assert even_expand(Polynomial([])).is_zero()


def test_canonical_form_and_degree():
    assert Polynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Polynomial([0, 0]).degree == -1
    assert P("t^3 - t^3 + t").degree == 1


def test_text_round_trip():
    for text in ["3*t^2 + 1/2*t - 4", "-t", "t^5 - 2/3", "0", "7"]:
        f = P(text)
        assert P(str(f)) == f
    assert str(P("3*t^2 + 1/2*t - 4")) == "3*t^2 + 1/2*t - 4"


def test_parse_errors():
    for bad in ["t^", "3**t", "(t+1", "x+1", ""]:
        with pytest.raises(ValueError):
            P(bad)


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        P("t") + P("t", GF(5))
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + Fraction(1, 2)
    with pytest.raises(ValueError):
        GF(6)


def test_field_specs():
    assert field_from_spec("q") is QQ
    assert field_from_spec("fp:7") == GF(7)
    with pytest.raises(ValueError):
        field_from_spec("r")


def test_fp_values_reduced():
    x = GF(7)(-1)
    assert isinstance(x, FpElement) and x.value == 6
    assert GF(7)(Fraction(1, 2)) * 2 == 1
    assert GF(7)("3/4") * 4 == 3
    with pytest.raises(ZeroDivisionError):
        GF(7)(0).inverse()


def test_rationals_reduced():
    x = QQ(Fraction(6, -4))
    assert (x.numerator, x.denominator) == (-3, 2)


@given(fractions(), fractions(), fractions())
def test_field_axioms_rationals(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if x:
        assert x * (1 / x) == 1


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_field_axioms_gf13(i, j, k):
    F = GF(13)
    x, y, z = F(i), F(j), F(k)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1
        assert y / x * x == y


polys = st.lists(fractions(), max_size=5).map(Polynomial)


@given(polys, polys)
def test_even_expand_is_ring_homomorphism(f, g):
    assert even_expand(f * g) == even_expand(f) * even_expand(g)
    assert even_expand(f + g) == even_expand(f) + even_expand(g)
    assert all(not c for c in even_expand(f).coeffs[1::2])


@given(polys, polys)
def test_degree_of_product(f, g):
    if f and g:
        assert (f * g).degree == f.degree + g.degree
