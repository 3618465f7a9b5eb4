"""K[t] inside L: codes, the membership system and explicit witnesses."""

from freelie import FreeLieAlgebra
from freelie.eqn import phi_system, project, span, truncated_kernel
from freelie.interp import (
    check_oplus,
    check_phi,
    decode_poly,
    encode_poly,
    equiv,
    otimes_check,
    otimes_witness,
    psi_partner,
    psi_witness,
    witness_s,
)
from freelie.lie import ad_power, bracket
from freelie.scalars import parse_polynomial as poly

L = FreeLieAlgebra(3)
a, b, c = L.gens()

# f is coded by [b, f(a^2)] + alpha*a; alpha is invisible up to equivalence
u = encode_poly(L, poly("t + 1"), 5)
print("code of t + 1 (alpha = 5):", u)
print("decoded:", decode_poly(u))
print("equivalent to alpha = 0 code:", equiv(u, encode_poly(L, poly("t + 1"))))

# addition is addition of codes
print("\ncode(t) + code(1) ~ code(t+1):", check_oplus(encode_poly(L, poly("t")), encode_poly(L, poly("1")), u))

# the key identity: [[r,a^(m)], [b,a^(2n)]] = [[r,a^(m+2n)], b] + [s, a]
s = witness_s(c, 0, 1)
print("\ns for r = c, m = 0, n = 1:", s)
lhs = bracket(c, ad_power(b, a, 2))
print("identity holds:", lhs == bracket(ad_power(c, a, 2), b) + bracket(s, a))

# the membership system and a witness for f = t^2 - t
f = poly("t^2 - t")
x, y, z, z1, z2 = psi_witness(L, f, 1, 2)
print("\nwitness for f = t^2 - t passes the system:", check_phi(x, y, z, z1, z2))

# conversely, all degree <= 5 solutions project onto the explicit codes
K = truncated_kernel(phi_system(L), 5)
proj = project(K, ["x", "y"])
zero = L.zero()
codes = [{"x": a, "y": zero}, {"x": zero, "y": a}]
codes += [{"x": ad_power(b, a, 2 * n), "y": ad_power(c, a, 2 * n)} for n in range(3)]
print("kernel dim", K.dim, "projection dim", proj.dim, "equals codes:", proj == span(L, ["x", "y"], codes, 5))

# products: [[b,f(a^2)], [c,g(a^2)]] - [[b,h(a^2)], c] lies in [L, a] exactly when fg = h
f, g = poly("t + 1"), poly("t")
print("\n(t+1) t = t^2 + t :", otimes_check(L, f, g, poly("t^2 + t")))
print("(t+1) t = t^2     :", otimes_check(L, f, g, poly("t^2")))
s = otimes_witness(L, f, g)
lhs = bracket(encode_poly(L, f), psi_partner(L, g))
print("explicit s found:", lhs == bracket(encode_poly(L, f * g), c) + bracket(s, a))
