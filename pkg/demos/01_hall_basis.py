"""Hall basis of the free Lie algebra on a, b, c and its graded dimensions."""

from freelie import generate_basis, witt_dimension
from freelie.hall import basis_of_multidegree, hall_compare, is_hall

# every Hall monomial up to degree 3 on three generators, in Hall order
basis = generate_basis(3, 3)
print("Hall monomials of degree <= 3:")
for m in basis:
    print("  ", m)

# per-degree counts agree with Witt's necklace formula
print("\ndegree  count  witt")
big = generate_basis(3, 6)
for n in range(1, 7):
    count = sum(1 for m in big if m.degree == n)
    print(f"{n:>6} {count:>6} {witt_dimension(3, n):>5}")

# the order compares degree first, then the left and right factors
ba, ca = basis[3], basis[4]
print("\nhall_compare([b,a], [c,a]) =", hall_compare(ba, ca))
print("[[b,a],a] is a Hall monomial:", is_hall(basis[-1]))

# a fine grading: the monomials of multidegree (2, 1, 0) are [[b,a],a] only
print("\nmultidegree (2,1,0):", [str(m) for m in basis_of_multidegree((2, 1, 0))])
print("multidegree (1,1,1):", [str(m) for m in basis_of_multidegree((1, 1, 1))])
