"""Arithmetic in the free Lie algebra: brackets, normal forms, the a-action."""

from freelie import FreeLieAlgebra, bracket, left_normed, normal_form, poly_action
from freelie.lie import ad_power, homogeneous_components, truncate
from freelie.scalars import parse_polynomial

L = FreeLieAlgebra(3)  # rank 3 over the rationals
a, b, c = L.gens()

# brackets come back in Hall normal form
print("[a,b]       =", bracket(a, b))
print("[[c,b],a]   =", normal_form((("c", "b"), "a"), L))
print("[[b,a],[c,a]] =", bracket(L.parse("[b,a]"), L.parse("[c,a]")))

# elements parse from text, with left-normed shorthand [x,y,z] = [[x,y],z]
u = L.parse("2*[b,a,a] - [c,b] + 1/2*a")
print("\nu =", u)
print("homogeneous parts:", {md: str(p) for md, p in homogeneous_components(u).items()})
print("u truncated to degree 2:", truncate(u, 2))

# Jacobi holds on arbitrary elements
v, w = L.parse("[c,a] + b"), L.parse("[b,a] - 3*c")
jac = bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v)
print("\nJacobi sum:", jac)

# right multiplication by a turns K[t] into operators: [b, f(a)]
f = parse_polynomial("t^2 - 2*t + 3")
print("\n[b, f(a)] with f = t^2 - 2t + 3:", poly_action(b, f, a))
print("equals b*3 - 2[b,a] + [b,a,a]:", poly_action(b, f, a) == 3 * b - 2 * ad_power(b, a, 1) + left_normed(b, a, a))
