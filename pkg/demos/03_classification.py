"""The classifier: four normal forms with verified change-of-basis witnesses.

A 3x3 matrix of linear forms whose determinant vanishes identically is
equivalent, under multiplication by invertible constant matrices F (rows) and
G (columns), to a matrix with a zero row, a zero column, a zero 2x2 square,
or an antisymmetric matrix.  ``classify`` picks the case and returns (F, G)
together with F @ X @ G; ``verify_witness`` re-checks everything exactly.
"""

from singular_forms import (
    ComponentTag,
    FormMatrix,
    LinForm,
    PrimeField,
    QQ,
    classify,
    sample_component,
    span_bound_check,
    verify_witness,
)

x1, x2, x3, x4, x5 = (LinForm.variable(QQ, 5, t) for t in range(1, 6))
zero = LinForm.zero(QQ, 5)


def show(title, m):
    print(f"-- {title} --")
    report = classify(m)
    print("singular:", report.is_singular, " in_R:", report.in_R, " in_C:", report.in_C,
          " effective variables:", report.effective_n)
    if report.witness is None:
        print("no witness (zero or nonsingular matrix)")
    else:
        w = report.witness
        print("tag:", w.tag.value)
        print("F:", w.f.to_lists())
        print("G:", w.g.to_lists())
        print("normal form rows:")
        for row in w.normal_form.entries:
            print("   [", ",  ".join(str(f) for f in row), "]")
        print("witness verifies:", verify_witness(m, w))
    print()


show("already carries a zero 2x2 square",
     FormMatrix.from_linforms([[x1, x2, x3], [x4, zero, zero], [x5, zero, zero]]))

show("equal first and second columns",
     FormMatrix.from_linforms([[x1, x1, x3], [x2, x2, x4], [x3, x3, x5]]))

show("proportional rows",
     FormMatrix.from_linforms([[x1, x2, x3], [x1, x2, x3], [x4, x5, x1]]))

gf = PrimeField(32003)
print("== a hidden antisymmetric matrix over GF(32003) ==")
moved = sample_component(ComponentTag.ANTISYMMETRIC, 3, gf, seed=7)
report = classify(moved)
print("tag recovered from a random orbit point:", report.witness.tag.value)
print("normal form rows:")
for row in report.witness.normal_form.entries:
    print("   [", ",  ".join(str(f) for f in row), "]")
print()

print("== span bound ==")
print("A singular matrix can use at most 6 independent entry directions;")
print("with 7 or more the determinant cannot vanish identically.")
from random import Random

from singular_forms import coefficient_span_dim, random_linear_matrix

rng = Random(0)
wide = random_linear_matrix(gf, 9, rng)
print("entry span of a random matrix in 9 variables:",
      coefficient_span_dim(wide.all_linforms()))
print("span bound holds:", span_bound_check(wide),
      "(determinant vanishes:", wide.determinant().is_zero(), ")")
