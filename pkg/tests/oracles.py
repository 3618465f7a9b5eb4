"""Independent oracles used by the test-suite.

None of these call the Hall rewriting in ``freelie.lie``.
"""

from collections import defaultdict
from itertools import product

from sympy import divisors, mobius

from freelie.hall import Monomial


def witt(rank, n):
    return sum(mobius(d) * rank ** (n // d) for d in divisors(n)) // n


def _assoc_monomial(m, memo={}):
    hit = memo.get(m)
    if hit is not None:
        return hit
    if m.is_leaf:
        out = {(m.index,): 1}
    else:
        x, y = _assoc_monomial(m.left), _assoc_monomial(m.right)
        out = defaultdict(int)
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                out[w1 + w2] += c1 * c2
                out[w2 + w1] -= c1 * c2
        out = {w: c for w, c in out.items() if c}
    memo[m] = out
    return out


def to_associative(u):
    """Image of a Lie element in the free associative algebra, words -> coeffs."""
    out = {}
    for m, c in u.terms.items():
        for w, k in _assoc_monomial(m).items():
            v = out.get(w, 0) + c * k
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def assoc_commutator(x, y):
    out = defaultdict(int)
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            out[w1 + w2] += c1 * c2
            out[w2 + w1] -= c1 * c2
    return {w: c for w, c in out.items() if c}


def all_trees(rank, degree):
    """Every binary bracket tree of the given degree, Hall or not."""
    if degree == 1:
        return [Monomial.leaf(i, rank) for i in range(rank)]
    out = []
    for k in range(1, degree):
        for left, right in product(all_trees(rank, k), all_trees(rank, degree - k)):
            out.append(Monomial.node(left, right))
    return out


def jacobi_expand(tree, algebra):
    """Associative image of an arbitrary bracket tree, expanded as xy - yx."""
    if tree.is_leaf:
        return {(tree.index,): algebra.field.one}
    return assoc_commutator(jacobi_expand(tree.left, algebra), jacobi_expand(tree.right, algebra))
