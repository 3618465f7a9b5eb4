"""Compiling polynomial equations over K[t] into equations over L."""

from freelie.eqn import PolySystem, check_system, compile_poly_system, solve_affine
from freelie.scalars import QQ, parse_polynomial as poly

# u * u = w, flattened to atoms and compiled
P = PolySystem.parse(["u*u = w", "w = t^2"], QQ)
print("atoms:", P)
C = compile_poly_system(P)
print("compiled into", len(C.system), "Lie equations in", len(C.system.variables), "unknowns")
for eq in C.system.to_json()["equations"]:
    print("  ", eq["lhs"], "=", eq["rhs"])

# a true solution maps to a solution of the Lie system
sigma = C.map_solution({"u": poly("t"), "w": poly("t^2")})
report = check_system(C.system, sigma)
print("\nu = t, w = t^2 solves the Lie system:", report.passed)

# u = -t also works, u = t + 1 does not
print("u = -t    :", check_system(C.system, C.map_solution({"u": poly("-t"), "w": poly("t^2")})).passed)
bad = C.map_solution({"u": poly("t + 1"), "w": poly("t^2")})
report = check_system(C.system, bad)
print("u = t + 1 :", report.passed, "failing equations", report.failures)

# no choice of the product auxiliary rescues the wrong assignment
fixed = {k: v for k, v in bad.items() if not k.startswith("s_")}
print("auxiliary exists:", solve_affine(C.system, 6, fixed) is not None)
