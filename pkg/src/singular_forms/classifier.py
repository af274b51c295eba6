"""Constructive classification of singular 3x3 matrices of linear forms.

Every 3x3 matrix of linear forms with identically vanishing determinant can
be carried by an invertible constant row operation F and column operation G
onto one of four normal-form patterns: zero last row, zero last column, zero
lower-right 2x2 square, or an alternating (antisymmetric) matrix.  The
classifier decides which case applies and returns the witness pair (F, G)
together with the normal form, verified exactly before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .errors import InternalContradiction, WrongShape
from .fields import Field, Scalar
from .forms import Form, FormVector, LinForm, coefficient_span_dim
from .form_matrix import FormMatrix, normalize_leading
from .linalg import ConstMatrix
from .syzygy import constant_relation, trefl_basis


class ComponentTag(Enum):
    ZERO_ROW = "zero-row"
    ZERO_COLUMN = "zero-column"
    ZERO_SQUARE = "zero-square"
    ANTISYMMETRIC = "antisymmetric"

    @classmethod
    def parse(cls, text: str) -> "ComponentTag":
        key = text.strip().lower().replace("_", "-")
        for tag in cls:
            if tag.value == key:
                return tag
        raise ValueError(f"unknown component tag {text!r}")


@dataclass(frozen=True)
class Witness:
    """Invertible pair (f, g) with f @ X @ g equal to the stored normal form."""

    f: ConstMatrix
    g: ConstMatrix
    tag: ComponentTag
    normal_form: FormMatrix


@dataclass(frozen=True)
class ClassificationReport:
    is_singular: bool
    in_R: bool
    in_C: bool
    witness: Optional[Witness]
    effective_n: int

    def to_json(self) -> dict:
        out = {
            "singular": self.is_singular,
            "in_R": self.in_R,
            "in_C": self.in_C,
            "tag": self.witness.tag.value if self.witness else None,
            "F": self.witness.f.to_lists() if self.witness else None,
            "G": self.witness.g.to_lists() if self.witness else None,
            "normal_form": self.witness.normal_form.to_json() if self.witness else None,
            "effective_n": self.effective_n,
        }
        return out


def matches_pattern(tag: ComponentTag, m: FormMatrix) -> bool:
    """Exact zero-pattern test for a normal form of the given tag."""
    e = m.entries
    if tag is ComponentTag.ZERO_ROW:
        return all(f.is_zero() for f in e[2])
    if tag is ComponentTag.ZERO_COLUMN:
        return all(row[2].is_zero() for row in e)
    if tag is ComponentTag.ZERO_SQUARE:
        return all(e[i][j].is_zero() for i in (1, 2) for j in (1, 2))
    return (
        all(e[i][i].is_zero() for i in range(3))
        and all((e[i][j] + e[j][i]).is_zero() for i in range(3) for j in range(i + 1, 3))
    )


def _constant_vector(v: FormVector) -> list[Scalar]:
    zero_exp = (0,) * v.n
    return [f.coefficient(zero_exp) for f in v.entries]


def _complete_to_basis(field: Field, w: list[Scalar], last: bool) -> ConstMatrix:
    """Invertible 3x3 whose last (or first available pair of) rows include w.

    Unit rows are chosen greedily in index order; w is placed as the third
    row.  With ``last`` False the same matrix is meant to be used transposed,
    so the construction is shared.
    """
    for a, b in combinations(range(3), 2):
        rows = [[field.one if k == a else field.zero for k in range(3)],
                [field.one if k == b else field.zero for k in range(3)],
                list(w)]
        cand = ConstMatrix(field, rows)
        if cand.rank() == 3:
            return cand
    raise InternalContradiction("kernel vector could not be completed to a basis")


def _alternating_matrix(u: FormVector) -> FormMatrix:
    """The alternating normal form built from u: rows (0,u3,-u2), (-u3,0,u1), (u2,-u1,0)."""
    field, n = u.field, u.n
    z = Form.zero(field, n, 1)
    u1, u2, u3 = u.entries
    return FormMatrix(field, n, 1, [
        [z, u3, -u2],
        [-u3, z, u1],
        [u2, -u1, z],
    ])


def _has_rank_two(x: FormMatrix) -> bool:
    ent = x.entries
    for rows in combinations(range(3), 2):
        for cols in combinations(range(3), 2):
            minor = ent[rows[0]][cols[0]] * ent[rows[1]][cols[1]] \
                - ent[rows[0]][cols[1]] * ent[rows[1]][cols[0]]
            if not minor.is_zero():
                return True
    return False


def classify(x: FormMatrix) -> ClassificationReport:
    """Full classification pipeline; see the module docstring for the contract.

    Branch order for the witness: zero row, zero column, then the
    antisymmetric or zero-square case depending on the span of the primitive
    degree-1 kernel vector.  The zero matrix is reported without a witness.
    """
    if x.nrows != 3 or x.ncols != 3 or x.degree != 1:
        raise WrongShape(
            f"classifier expects a 3x3 matrix of linear forms, "
            f"got {x.nrows}x{x.ncols} of degree {x.degree}"
        )
    field = x.field
    in_R = x.coefficient_matrix("rows").rank() <= 2
    in_C = x.coefficient_matrix("cols").rank() <= 2
    effective_n = coefficient_span_dim(x.all_linforms())
    singular = x.determinant().is_zero()
    if not singular or x.is_zero():
        return ClassificationReport(singular, in_R, in_C, None, effective_n)

    witness = None
    left_const = x.transpose().kernel_at_degree(0)
    if left_const:
        w = _constant_vector(left_const[0])
        f = _complete_to_basis(field, w, last=True)
        g = ConstMatrix.identity(field, 3)
        witness = Witness(f, g, ComponentTag.ZERO_ROW, x.const_left(f))
    else:
        right_const = x.kernel_at_degree(0)
        if right_const:
            w = _constant_vector(right_const[0])
            g = _complete_to_basis(field, w, last=False).transpose()
            f = ConstMatrix.identity(field, 3)
            witness = Witness(f, g, ComponentTag.ZERO_COLUMN, x.const_right(g))
        else:
            witness = _classify_degree_one_kernel(x)

    if not verify_witness(x, witness):
        raise InternalContradiction("constructed witness failed verification")
    return ClassificationReport(True, in_R, in_C, witness, effective_n)


def _classify_degree_one_kernel(x: FormMatrix) -> Witness:
    """Witness construction when no constant kernel exists on either side.

    The matrix then has symbolic rank 2 and a one-dimensional space of
    degree-1 kernel vectors; the span of that vector's entries decides
    between the antisymmetric and zero-square normal forms.
    """
    field = x.field
    if not _has_rank_two(x):
        raise InternalContradiction("expected symbolic rank 2 in the kernel branch")
    kernel = x.kernel_at_degree(1)
    if len(kernel) != 1:
        raise InternalContradiction(
            f"degree-1 kernel has dimension {len(kernel)}, expected 1"
        )
    u = normalize_leading(kernel[0])
    u_lin = u.linforms()
    span_u = coefficient_span_dim(u_lin)
    identity = ConstMatrix.identity(field, 3)

    if span_u == 3:
        normal = _alternating_matrix(u)
        # x = F' @ normal since the rows of x lie in the Koszul span of u.
        basis_coeffs = normal.coefficient_matrix("rows")
        sol = basis_coeffs.transpose().solve_right(x.coefficient_matrix("rows").transpose())
        if sol is None:
            raise InternalContradiction("rows do not lie in the Koszul span")
        f = sol.transpose().invert()
        return Witness(f, identity, ComponentTag.ANTISYMMETRIC, normal)

    if span_u != 2:
        raise InternalContradiction(f"kernel vector span {span_u} is impossible here")

    triples = trefl_basis(u_lin)
    basis_mat = FormMatrix.from_linforms([list(t) for t in triples])
    sol = basis_mat.coefficient_matrix("rows").transpose().solve_right(
        x.coefficient_matrix("rows").transpose()
    )
    if sol is None:
        raise InternalContradiction("rows do not lie in the syzygy space of u")
    coeffs = sol.transpose()  # row i = (alpha_i, beta_i1, ..., beta_in)
    alpha = [coeffs[i, 0] for i in range(3)]
    if not any(alpha):
        raise InternalContradiction("rows have no Koszul component, rank would be 1")
    lead = next(i for i in range(3) if alpha[i])
    alpha_null = ConstMatrix(field, [alpha]).nullspace()
    f = ConstMatrix(field, [
        [field.one if k == lead else field.zero for k in range(3)],
        alpha_null[0].column_values(),
        alpha_null[1].column_values(),
    ])
    if f.rank() != 3:
        raise InternalContradiction("row operation matrix is singular")

    phi = constant_relation(u_lin)
    j0 = next(j for j in range(3) if phi[j])
    first_col = [field.one / phi[j0] if k == j0 else field.zero for k in range(3)]
    phi_null = ConstMatrix(field, [list(phi)]).nullspace()
    g = ConstMatrix(field, [
        [first_col[k], phi_null[0].column_values()[k], phi_null[1].column_values()[k]]
        for k in range(3)
    ])
    if g.rank() != 3:
        raise InternalContradiction("column operation matrix is singular")
    normal = x.const_left(f).const_right(g)
    return Witness(f, g, ComponentTag.ZERO_SQUARE, normal)


def verify_witness(x: FormMatrix, w: Witness) -> bool:
    """True iff w.f, w.g are invertible, f @ x @ g equals the stored normal
    form, and that normal form matches the tag's zero pattern exactly."""
    if w.f.nrows != 3 or w.f.ncols != 3 or w.g.nrows != 3 or w.g.ncols != 3:
        return False
    if x.nrows != 3 or x.ncols != 3:
        return False
    if w.f.rank() != 3 or w.g.rank() != 3:
        return False
    product = x.const_left(w.f).const_right(w.g)
    return product == w.normal_form and matches_pattern(w.tag, w.normal_form)


def reduce_variables(x: FormMatrix) -> tuple[FormMatrix, int]:
    """Rewrite the matrix over a row-echelon basis of its entry span.

    Returns the equivalent matrix in m effective variables together with m;
    classification is invariant under this substitution.
    """
    if x.degree != 1:
        raise WrongShape("variable reduction applies to matrices of linear forms")
    field = x.field
    lin = x.all_linforms()
    red, pivots = ConstMatrix(field, [f.coeffs for f in lin]).rref()
    m = len(pivots)
    grid = []
    for i in range(x.nrows):
        row = []
        for j in range(x.ncols):
            coeffs = lin[i * x.ncols + j].coeffs
            row.append(LinForm(field, [coeffs[p] for p in pivots]))
        grid.append(row)
    if m == 0:
        return FormMatrix(field, 0, 1,
                          [[Form.zero(field, 0, 1)] * x.ncols for _ in range(x.nrows)]), 0
    return FormMatrix.from_linforms(grid), m


def span_bound_check(x: FormMatrix) -> bool:
    """True unless the entry span has dimension >= 7 while the determinant vanishes."""
    if x.nrows != 3 or x.ncols != 3 or x.degree != 1:
        raise WrongShape("span bound concerns 3x3 matrices of linear forms")
    if coefficient_span_dim(x.all_linforms()) < 7:
        return True
    return not x.determinant().is_zero()
