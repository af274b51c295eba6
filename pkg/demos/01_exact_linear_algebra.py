"""Exact scalars and constant linear algebra.

The library never touches floating point: rationals are arbitrary-precision
fractions in lowest terms, and GF(p) elements are reduced residues.  All of
the matrix routines (rank, nullspace, inverse, solve) are deterministic, so
the same input always produces the same pivots and the same basis vectors.
"""

from fractions import Fraction

from singular_forms import ConstMatrix, PrimeField, QQ, random_invertible

print("== scalars ==")
half = QQ.element(2, 4)
print("2/4 is stored as", half, "with denominator", half.denominator)

gf = PrimeField(32003)
x = gf.element(-5)
print("-5 mod 32003 =", x, "and its inverse is", gf.one / x, "(check:", (gf.one / x) * x, ")")

print()
print("== rank / nullspace / inverse ==")
m = ConstMatrix(QQ, [
    [1, 2, 3],
    [4, 5, 6],
    [7, 8, 9],
])
print("rank of the 1..9 matrix:", m.rank())
for v in m.nullspace():
    print("kernel vector:", v.column_values(), "-> m @ v =", (m @ v).column_values())

a = ConstMatrix(QQ, [[Fraction(2), 0], [0, Fraction(1, 3)]])
print("inverse of diag(2, 1/3):", a.invert().to_lists())

print()
print("== the same computations over GF(32003) ==")
mp = ConstMatrix(gf, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
print("rank:", mp.rank(), " kernel size:", len(mp.nullspace()))

print()
print("== seeded random invertible matrices ==")
r1 = random_invertible(3, gf, seed=1)
r2 = random_invertible(3, gf, seed=1)
print("same seed, same matrix:", r1 == r2)
print("product with the inverse is the identity:",
      r1 @ r1.invert() == ConstMatrix.identity(gf, 3))
