"""Random generators and strategies shared by the tests."""

from fractions import Fraction

from hypothesis import strategies as st

from freelie.hall import generate_basis
from freelie.scalars import Polynomial


def random_scalar(rng, field, allow_zero=True):
    while True:
        if field.characteristic == 0:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        else:
            x = field(rng.randrange(field.characteristic))
        if allow_zero or x:
            return field(x)


def random_element(rng, L, max_degree=4, max_terms=4):
    basis = generate_basis(L.rank, max_degree)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(basis)] = random_scalar(rng, L.field)
    return L.element(terms)


def random_poly(rng, field, max_degree, nonzero=False):
    while True:
        n = rng.randint(0, max_degree)
        f = Polynomial([random_scalar(rng, field) for _ in range(n + 1)], field)
        if f or not nonzero:
            return f


def fractions(max_den=6):
    return st.builds(Fraction, st.integers(-20, 20), st.integers(1, max_den))


def elements(L, max_degree=4, max_terms=4):
    basis = generate_basis(L.rank, max_degree)
    coeff = fractions() if L.field.characteristic == 0 else st.integers(0, L.field.characteristic - 1)
    return st.dictionaries(st.sampled_from(basis), coeff, max_size=max_terms).map(L.element)
