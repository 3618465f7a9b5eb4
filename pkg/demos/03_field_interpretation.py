"""The field K is definable in L: scalars as tuples, arithmetic as bracket equations."""

from fractions import Fraction

from freelie import FreeLieAlgebra
from freelie.interp import (
    check_field_add,
    check_field_mul,
    check_scalar_action,
    decode_field,
    encode_field,
    in_A,
    in_A0,
)

L = FreeLieAlgebra(3)
a, b, c = L.gens()

# alpha is coded as (alpha*a, alpha*b, alpha*c)
two, three = encode_field(L, 2), encode_field(L, 3)
print("code of 2:", [str(y) for y in two])
print("decoded:", decode_field(encode_field(L, Fraction(-3, 2))))

# the tuple (a, 0, 0) commutes componentwise with the generators but is not a code
odd = (a, L.zero(), L.zero())
print("\n(a,0,0) in A:", in_A(odd), " in A0:", in_A0(odd))

# addition and multiplication are checked by equations only
print("\n2 + 3 = 5 :", check_field_add(two, three, encode_field(L, 5)))
print("2 * 3 = 6 :", check_field_mul(two, three, encode_field(L, 6)))
print("2 * 3 = 5 :", check_field_mul(two, three, encode_field(L, 5)))

# the scalar action: [z, a_i] = [x, y_i] forces z = alpha * x
x = L.parse("[c,b] + [b,a,a]")
print("\nz = 2x satisfies the action system:", check_scalar_action(x, two, x * 2))
print("z = 3x satisfies it:", check_scalar_action(x, two, x * 3))
