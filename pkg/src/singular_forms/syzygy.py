"""Linear syzygies of tuples of linear forms.

A syzygy of (l_1, ..., l_r) is a tuple of linear forms (f_1, ..., f_r) with
sum(f_i * l_i) = 0.  The space of all such tuples has dimension
(r - c) * n + C(c, 2), where c is the dimension of the span of the l_i; for
triples there is an explicit spanning set built from Koszul relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import InternalContradiction, SpanTooSmall
from .fields import Field, PrimeField, Scalar
from .forms import Form, LinForm, coefficient_span_dim, monomial_index, monomials
from .linalg import ConstMatrix, nullspace_raw


@dataclass(frozen=True)
class SyzygySpace:
    """Nullspace of (f_1, ..., f_r) -> sum(f_i * l_i) on tuples of linear forms."""

    r: int
    n: int
    c: int
    dim: int
    basis: tuple[tuple[LinForm, ...], ...]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "c": self.c,
            "dim": self.dim,
            "basis": [[f.to_json() for f in tup] for tup in self.basis],
        }


def expected_syzygy_dim(r: int, n: int, c: int) -> int:
    return (r - c) * n + comb(c, 2)


def syzygy_space(ells: Sequence[LinForm]) -> SyzygySpace:
    """Compute the syzygy space of the given linear forms as a constant nullspace.

    The r*n unknown coefficients of (f_1, ..., f_r) map linearly to the
    quadratic sum(f_i * l_i); the kernel basis comes back echelon-normalized.
    The computed dimension is checked against (r - c) * n + C(c, 2).
    """
    if not ells:
        raise ValueError("need at least one linear form")
    field = ells[0].field
    n = ells[0].n
    r = len(ells)
    for f in ells:
        if f.n != n or f.field != field:
            raise ValueError("forms must share the variable count and field")
    quad_index = monomial_index(n, 2)
    height = len(quad_index)
    width = r * n
    modular = isinstance(field, PrimeField)
    zero_raw = 0 if modular else Fraction(0)
    rows = [[zero_raw] * width for _ in range(height)]
    for i, ell in enumerate(ells):
        for s, c in enumerate(ell.coeffs):
            if not c:
                continue
            raw = c.val if modular else c
            for t in range(n):
                e = [0] * n
                e[s] += 1
                e[t] += 1
                row = rows[quad_index[tuple(e)]]
                col = i * n + t
                row[col] = row[col] + raw
    if modular:
        p = field.p
        rows = [[v % p for v in row] for row in rows]
    kernel = nullspace_raw(rows, field, width)
    basis = []
    for vec in kernel:
        wrapped = [field.element(v) if modular else v for v in vec]
        basis.append(tuple(LinForm(field, wrapped[i * n:(i + 1) * n]) for i in range(r)))
    c_dim = coefficient_span_dim(ells)
    expected = expected_syzygy_dim(r, n, c_dim)
    if len(basis) != expected:
        raise InternalContradiction(
            f"syzygy dimension {len(basis)} differs from formula value {expected}"
        )
    return SyzygySpace(r=r, n=n, c=c_dim, dim=len(basis), basis=tuple(basis))


def is_syzygy(tup: Sequence[LinForm], ells: Sequence[LinForm]) -> bool:
    """Check sum(f_i * l_i) = 0 by direct expansion."""
    field = ells[0].field
    n = ells[0].n
    acc = Form.zero(field, n, 2)
    for f, ell in zip(tup, ells):
        acc = acc + f * ell
    return acc.is_zero()


def koszul_triple(ells: Sequence[LinForm], i: int, j: int) -> tuple[LinForm, ...]:
    """The tautological syzygy supported on positions i < j: l_j at i, -l_i at j."""
    field = ells[0].field
    n = ells[0].n
    out = [LinForm.zero(field, n) for _ in range(len(ells))]
    out[i] = ells[j]
    out[j] = -ells[i]
    return tuple(out)


def constant_relation(ells: Sequence[LinForm]) -> tuple[Scalar, ...]:
    """The constant relation sum(phi_i * l_i) = 0 of a triple of span dimension 2.

    Normalized so the highest-index nonzero coefficient equals 1 (when the
    third form is the dependent one this is the classical phi_3 = 1 shape).
    """
    field = ells[0].field
    coeff = ConstMatrix(field, [f.coeffs for f in ells])
    kernel = coeff.transpose().nullspace()
    if len(kernel) != 1:
        raise SpanTooSmall(f"expected a single relation, found {len(kernel)}")
    phi = list(kernel[0].column_values())
    last = max(i for i, v in enumerate(phi) if v)
    scale = field.one / phi[last]
    return tuple(v * scale for v in phi)


def trefl_basis(ells: Sequence[LinForm]) -> list[tuple[LinForm, ...]]:
    """Explicit spanning set of the syzygy space of a triple of linear forms.

    For an independent triple these are the three Koszul triples; for span
    dimension 2 the Koszul triple of the first independent pair plus the n
    multiples x_t * phi of the normalized constant relation.  Every returned
    triple is checked to be a syzygy.
    """
    if len(ells) != 3:
        raise ValueError("spanning sets are built for triples of forms")
    field = ells[0].field
    n = ells[0].n
    c = coefficient_span_dim(ells)
    if c <= 1:
        raise SpanTooSmall(f"span dimension {c} admits no triple spanning set")
    if c == 3:
        triples = [koszul_triple(ells, 1, 2), koszul_triple(ells, 0, 2),
                   koszul_triple(ells, 0, 1)]
        # Match the cyclic sign layout (0, l3, -l2), (-l3, 0, l1), (l2, -l1, 0).
        triples[1] = tuple(-f for f in triples[1])
    else:
        pair = next(
            (i, j)
            for i in range(3) for j in range(i + 1, 3)
            if coefficient_span_dim([ells[i], ells[j]]) == 2
        )
        phi = constant_relation(ells)
        triples = [koszul_triple(ells, *pair)]
        for t in range(1, n + 1):
            xt = LinForm.variable(field, n, t)
            triples.append(tuple(xt.scale(p) for p in phi))
    for tup in triples:
        if not is_syzygy(tup, ells):
            raise InternalContradiction("constructed triple is not a syzygy")
    return triples
