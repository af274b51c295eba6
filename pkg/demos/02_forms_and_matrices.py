"""Homogeneous forms and matrices of forms.

A matrix of linear forms can be singular (zero determinant as a polynomial)
without any constant combination of rows or columns vanishing.  The two
motivating examples: in the 2x2 matrix below the columns are equal, while the
3x3 one has no constant relation on either side, yet both determinants vanish
identically.  The adjugate and the rank-1 factorization recover exact kernel
vectors in both cases.
"""

from singular_forms import (
    FormMatrix,
    LinForm,
    QQ,
    cramer_vectors,
    exact_divide,
    outer_product,
    rank1_factor,
)

x1, x2, x3, x4, x5 = (LinForm.variable(QQ, 5, t) for t in range(1, 6))
zero = LinForm.zero(QQ, 5)

print("== form arithmetic ==")
p = (x1 + x2) * (x1 - x2)
print("(x1 + x2)(x1 - x2) =", p)
print("divided back by (x1 - x2):", exact_divide(p, (x1 - x2).to_form()))

print()
print("== a 2x2 singular matrix with equal columns ==")
a = LinForm.variable(QQ, 2, 1)
b = LinForm.variable(QQ, 2, 2)
first = FormMatrix.from_linforms([[a, a], [b, b]])
print("determinant:", first.determinant())
print("symbolic rank:", first.rank_over_K())
u, v = rank1_factor(first)
print("rank-1 factorization u =", u, ", v =", v)
print("u v^t reproduces the matrix:", outer_product(u, v) == first)

print()
print("== a 3x3 singular matrix with no constant kernel on either side ==")
second = FormMatrix.from_linforms([[x1, x2, x3], [x4, zero, zero], [x5, zero, zero]])
print("determinant is zero:", second.determinant().is_zero())
print("constant kernel:", second.kernel_at_degree(0))
print("constant cokernel:", second.transpose().kernel_at_degree(0))
print("symbolic rank:", second.rank_over_K())

adj = second.adjugate()
print("adjugate entries have degree:", adj.degree)
u, v = cramer_vectors(second)
print("kernel vectors from the adjugate: u =", u, ", v =", v)
print("X @ u = 0:", second.mul_vector(u).is_zero(),
      " v^t @ X = 0:", second.vec_mul_left(v).is_zero())
print("degrees add up to 2:", u.degree + v.degree == 2)

print()
print("== the adjugate identity ==")
diag = FormMatrix.from_linforms([
    [x1, zero, zero], [zero, x2, zero], [zero, zero, x3],
])
det = diag.determinant()
adj = diag.adjugate()
entry = diag[0, 0] * adj[0, 0] + diag[0, 1] * adj[1, 0] + diag[0, 2] * adj[2, 0]
print("det =", det, " and (X adj X)[0,0] =", entry)
