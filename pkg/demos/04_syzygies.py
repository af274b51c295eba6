"""Syzygies of linear forms.

A syzygy of (l1, ..., lr) is a tuple of linear forms (f1, ..., fr) with
f1*l1 + ... + fr*lr = 0.  The space of syzygies is computed as the kernel of
an exact constant matrix, and its dimension only depends on r, the number of
variables n, and the span dimension c of the forms:

    dim = (r - c) * n + C(c, 2).

For triples there are explicit spanning sets built from the Koszul relations
l_j * l_i - l_i * l_j = 0.
"""

from random import Random

from singular_forms import LinForm, QQ, syzygy_space, trefl_basis
from singular_forms.forms import random_linform
from singular_forms.syzygy import expected_syzygy_dim

x1, x2, x3 = (LinForm.variable(QQ, 3, t) for t in range(1, 4))

print("== independent triple (x1, x2, x3) ==")
space = syzygy_space([x1, x2, x3])
print("r =", space.r, " n =", space.n, " span c =", space.c, " dim =", space.dim)
for tup in trefl_basis([x1, x2, x3]):
    print("spanning triple:", "(" + ", ".join(str(f) for f in tup) + ")")

print()
print("== dependent triple (x1, x2, x1 + x2) in two variables ==")
y1, y2 = (LinForm.variable(QQ, 2, t) for t in (1, 2))
space = syzygy_space([y1, y2, y1 + y2])
print("span c =", space.c, " dim =", space.dim, " (that is n + 1)")
for tup in trefl_basis([y1, y2, y1 + y2]):
    print("spanning triple:", "(" + ", ".join(str(f) for f in tup) + ")")

print()
print("== the dimension formula on random tuples ==")
rng = Random(2024)
print(f"{'r':>2} {'n':>2} {'c':>2} {'computed':>8} {'formula':>8}")
for _ in range(10):
    r, n = rng.randint(1, 5), rng.randint(1, 6)
    ells = [random_linform(QQ, n, rng) for _ in range(r)]
    space = syzygy_space(ells)
    formula = expected_syzygy_dim(r, n, space.c)
    print(f"{r:>2} {n:>2} {space.c:>2} {space.dim:>8} {formula:>8}")
