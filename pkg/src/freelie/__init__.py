"""Exact arithmetic in free Lie algebras, with equational encodings of K and K[t].

>>> from freelie import FreeLieAlgebra, bracket
>>> L = FreeLieAlgebra(3)
>>> a, b, c = L.gens()
>>> print(bracket(a, bracket(b, a)))
-1*[[b,a],a]
"""

from .eqn import (
    CompiledSystem,
    EquationSystem,
    PolySystem,
    SubspaceBasis,
    check_system,
    compile_poly_system,
    map_solution,
    phi_system,
    project,
    solve_affine,
    truncated_kernel,
    truncated_solutions,
)
from .hall import Monomial, generate_basis, hall_compare, is_hall, witt_dimension
from .interp import (
    check_field_add,
    check_field_mul,
    check_oplus,
    check_phi,
    check_scalar_action,
    decode_field,
    decode_poly,
    encode_field,
    encode_poly,
    equiv,
    oplus,
    otimes,
    otimes_check,
    psi_witness,
    witness_s,
    witness_t,
)
from .lie import (
    FreeLieAlgebra,
    LieElement,
    ad_power,
    bracket,
    homogeneous_components,
    left_normed,
    normal_form,
    poly_action,
    truncate,
)
from .scalars import GF, QQ, Polynomial, parse_polynomial

__version__ = "0.1.0"
