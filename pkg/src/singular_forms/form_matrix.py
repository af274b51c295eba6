"""Matrices of homogeneous forms: determinants, adjugates, symbolic rank,
graded kernels, and rank-1 factorization.

Rank over the fraction field is decided from symbolic minors (every minor is
a form that either vanishes identically or does not), and kernels at a fixed
degree are found by linearizing in the unknown coefficients, so everything
reduces to exact constant linear algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from random import Random
from typing import Iterable, Sequence

from .errors import DegreeNotOne, InternalContradiction, NotRankOne, WrongRank
from .fields import Field, PrimeField
from .forms import (
    Form,
    FormVector,
    LinForm,
    exact_divide,
    monomial_index,
    monomials,
    random_linform,
)
from .linalg import ConstMatrix, nullspace_raw


class FormMatrix:
    """Immutable matrix whose entries are homogeneous forms of one degree."""

    __slots__ = ("field", "n", "nrows", "ncols", "degree", "entries")

    def __init__(self, field: Field, n: int, degree: int, entries: Iterable[Iterable[Form]]):
        grid = tuple(tuple(row) for row in entries)
        self.field = field
        self.n = n
        self.degree = degree
        self.nrows = len(grid)
        self.ncols = len(grid[0]) if grid else 0
        for row in grid:
            if len(row) != self.ncols:
                raise ValueError("ragged rows in form matrix")
            for f in row:
                if f.n != n or (f.terms and f.degree != degree):
                    raise ValueError("entries must be homogeneous of the common degree")
        self.entries = grid

    @classmethod
    def from_linforms(cls, grid: Sequence[Sequence[LinForm]]) -> "FormMatrix":
        field = grid[0][0].field
        n = grid[0][0].n
        return cls(field, n, 1, [[f.to_form() for f in row] for row in grid])

    @classmethod
    def zero(cls, field: Field, n: int, degree: int, nrows: int, ncols: int) -> "FormMatrix":
        z = Form.zero(field, n, degree)
        return cls(field, n, degree, [[z] * ncols for _ in range(nrows)])

    def __getitem__(self, pos) -> Form:
        i, j = pos
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(f.is_zero() for row in self.entries for f in row)

    def __eq__(self, other):
        if not isinstance(other, FormMatrix):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.entries == other.entries

    def transpose(self) -> "FormMatrix":
        return FormMatrix(self.field, self.n, self.degree, zip(*self.entries))

    def all_linforms(self) -> list[LinForm]:
        """The nine (in general rows*cols) entries as linear forms; degree 1 only."""
        if self.degree != 1:
            raise DegreeNotOne("entries are not linear forms")
        return [f.as_linform() for row in self.entries for f in row]

    def row_linforms(self, i: int) -> list[LinForm]:
        if self.degree != 1:
            raise DegreeNotOne("entries are not linear forms")
        return [f.as_linform() for f in self.entries[i]]

    def const_left(self, F: ConstMatrix) -> "FormMatrix":
        """The product F @ self for a constant matrix F."""
        if F.ncols != self.nrows:
            raise ValueError("shape mismatch")
        zero = Form.zero(self.field, self.n, self.degree)
        rows = []
        for i in range(F.nrows):
            frow = F.entries[i]
            out = []
            for j in range(self.ncols):
                acc = zero
                for k in range(self.nrows):
                    c = frow[k]
                    if c:
                        acc = acc + self.entries[k][j].scale(c)
                out.append(acc)
            rows.append(out)
        return FormMatrix(self.field, self.n, self.degree, rows)

    def const_right(self, G: ConstMatrix) -> "FormMatrix":
        """The product self @ G for a constant matrix G."""
        if self.ncols != G.nrows:
            raise ValueError("shape mismatch")
        zero = Form.zero(self.field, self.n, self.degree)
        rows = []
        for i in range(self.nrows):
            xrow = self.entries[i]
            out = []
            for j in range(G.ncols):
                acc = zero
                for k in range(self.ncols):
                    c = G.entries[k][j]
                    if c:
                        acc = acc + xrow[k].scale(c)
                out.append(acc)
            rows.append(out)
        return FormMatrix(self.field, self.n, self.degree, rows)

    def mul_vector(self, u: FormVector) -> FormVector:
        """The column vector self @ u."""
        if len(u) != self.ncols:
            raise ValueError("shape mismatch")
        out_degree = self.degree + u.degree
        out = []
        for i in range(self.nrows):
            acc = Form.zero(self.field, self.n, out_degree)
            for j in range(self.ncols):
                if not u[j].is_zero():
                    acc = acc + self.entries[i][j] * u[j]
            out.append(acc)
        return FormVector(self.field, self.n, out_degree, out)

    def vec_mul_left(self, v: FormVector) -> FormVector:
        """The row vector v^t @ self, returned as a vector of length ncols."""
        return self.transpose().mul_vector(v)

    def determinant(self) -> Form:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return _det_form_grid(self.entries, self.field, self.n, self.degree)

    def adjugate(self) -> "FormMatrix":
        """Signed-cofactor matrix with X @ adj(X) = adj(X) @ X = det(X) * Id.

        Entry (i, j) is (-1)^(i+j) times the minor obtained by deleting
        column i and row j.
        """
        size = self.nrows
        if size != self.ncols or size < 2:
            raise ValueError("adjugate needs a square matrix of size >= 2")
        out_degree = self.degree * (size - 1)
        rows = []
        for i in range(size):
            out = []
            for j in range(size):
                minor = [
                    tuple(self.entries[r][c] for c in range(size) if c != i)
                    for r in range(size) if r != j
                ]
                det = _det_form_grid(minor, self.field, self.n, self.degree)
                out.append(det if (i + j) % 2 == 0 else -det)
            rows.append(out)
        return FormMatrix(self.field, self.n, out_degree, rows)

    def rank_over_K(self) -> int:
        """Largest r such that some r x r minor is a nonzero form."""
        for r in range(min(self.nrows, self.ncols), 0, -1):
            for rows in combinations(range(self.nrows), r):
                for cols in combinations(range(self.ncols), r):
                    grid = [tuple(self.entries[i][j] for j in cols) for i in rows]
                    if not _det_form_grid(grid, self.field, self.n, self.degree).is_zero():
                        return r
        return 0

    def kernel_at_degree(self, d_u: int) -> list[FormVector]:
        """Basis of the space of vectors u of forms of degree d_u with self @ u = 0."""
        field = self.field
        n, d = self.n, self.degree
        mons_u = monomials(n, d_u)
        mu = len(mons_u)
        target = monomial_index(n, d + d_u)
        height = self.nrows * len(target)
        width = self.ncols * mu
        modular = isinstance(field, PrimeField)
        zero_raw = 0 if modular else Fraction(0)
        rows = [[zero_raw] * width for _ in range(height)]
        for i in range(self.nrows):
            base_row = i * len(target)
            for j in range(self.ncols):
                col0 = j * mu
                for e, c in self.entries[i][j].terms.items():
                    raw = c.val if modular else c
                    if d == 1:
                        shift = _shifted_indices(n, d_u, e.index(1))
                    else:
                        shift = tuple(
                            target[tuple(a + b for a, b in zip(e, m))] for m in mons_u
                        )
                    for mi in range(mu):
                        row = rows[base_row + shift[mi]]
                        row[col0 + mi] = row[col0 + mi] + raw
        if modular:
            p = field.p
            rows = [[v % p for v in row] for row in rows]
        basis = nullspace_raw(rows, field, width)
        out = []
        for vec in basis:
            entries = []
            for j in range(self.ncols):
                terms = {}
                for mi, m in enumerate(mons_u):
                    v = vec[j * mu + mi]
                    if v:
                        terms[m] = field.element(v) if modular else v
                entries.append(Form(field, n, d_u, terms))
            out.append(FormVector(field, n, d_u, entries))
        return out

    def evaluate(self, point: Sequence) -> ConstMatrix:
        """Entrywise evaluation at a point, as a constant matrix."""
        return ConstMatrix(
            self.field, [[f.evaluate(point) for f in row] for row in self.entries]
        )

    def coefficient_matrix(self, axis: str) -> ConstMatrix:
        """Constant matrix of entry coefficients, one row per matrix row or column.

        For ``axis="rows"`` row i concatenates the coefficient vectors of the
        entries of row i (a rows x (cols*n) matrix); ``axis="cols"`` does the
        same for the transpose.  Requires degree 1.
        """
        if self.degree != 1:
            raise DegreeNotOne("coefficient matrix is defined for matrices of linear forms")
        if axis == "cols":
            return self.transpose().coefficient_matrix("rows")
        if axis != "rows":
            raise ValueError(f"axis must be 'rows' or 'cols', got {axis!r}")
        rows = []
        for i in range(self.nrows):
            row: list = []
            for j in range(self.ncols):
                row.extend(self.entries[i][j].as_linform().coeffs)
            rows.append(row)
        return ConstMatrix(self.field, rows)

    def to_json(self) -> dict:
        if self.degree != 1:
            raise DegreeNotOne("JSON matrix format covers matrices of linear forms")
        return {
            "n": self.n,
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[f.as_linform().to_json() for f in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, field: Field, data: dict) -> "FormMatrix":
        n = int(data["n"])
        entries = data["entries"]
        if len(entries) != int(data["rows"]):
            raise ValueError("row count mismatch in matrix JSON")
        grid = []
        for row in entries:
            if len(row) != int(data["cols"]):
                raise ValueError("column count mismatch in matrix JSON")
            out = []
            for coeffs in row:
                if len(coeffs) != n:
                    raise ValueError(f"entry needs {n} coefficients, got {len(coeffs)}")
                out.append(LinForm.from_json(field, coeffs))
            grid.append(out)
        return cls.from_linforms(grid)

    def __repr__(self):
        body = "; ".join(", ".join(str(f) for f in row) for row in self.entries)
        return f"FormMatrix[{body}]"


@lru_cache(maxsize=None)
def _shifted_indices(n: int, d_u: int, t: int) -> tuple[int, ...]:
    """Index of x_t * m within monomials(n, d_u + 1), aligned with monomials(n, d_u)."""
    target = monomial_index(n, d_u + 1)
    out = []
    for m in monomials(n, d_u):
        e = list(m)
        e[t] += 1
        out.append(target[tuple(e)])
    return tuple(out)


def _det_form_grid(grid, field, n, degree) -> Form:
    size = len(grid)
    if size == 1:
        return grid[0][0]
    if size == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    acc = Form.zero(field, n, degree * size)
    first = grid[0]
    rest = grid[1:]
    for j in range(size):
        if first[j].is_zero():
            continue
        minor = [tuple(row[k] for k in range(size) if k != j) for row in rest]
        term = first[j] * _det_form_grid(minor, field, n, degree)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def outer_product(u: FormVector, v: FormVector) -> FormMatrix:
    """The rank-(at most)-1 matrix u @ v^t."""
    degree = u.degree + v.degree
    rows = [[ui * vj for vj in v.entries] for ui in u.entries]
    return FormMatrix(u.field, u.n, degree, rows)


def _proportionality_kernel(x: FormMatrix, d_u: int) -> list[FormVector]:
    """Basis of vectors w of degree d_u with w_i * x[k][j] = w_k * x[i][j] for all i<k, j.

    Nonzero solutions are exactly the multiples of the primitive column
    direction, so the basis is nonempty first at that direction's degree.
    """
    field = x.field
    n, d = x.n, x.degree
    a, b = x.nrows, x.ncols
    mons_u = monomials(n, d_u)
    mu = len(mons_u)
    target = monomial_index(n, d + d_u)
    pairs = list(combinations(range(a), 2))
    height = len(pairs) * b * len(target)
    width = a * mu
    modular = isinstance(field, PrimeField)
    zero_raw = 0 if modular else Fraction(0)
    rows = [[zero_raw] * width for _ in range(height)]
    for pi, (i, k) in enumerate(pairs):
        for j in range(b):
            base = (pi * b + j) * len(target)
            for sign, unknown, src in ((1, i, x.entries[k][j]), (-1, k, x.entries[i][j])):
                col0 = unknown * mu
                for e, c in src.terms.items():
                    raw = c.val if modular else c
                    if sign < 0:
                        raw = -raw
                    for mi, m in enumerate(mons_u):
                        row = rows[base + target[tuple(p + q for p, q in zip(e, m))]]
                        row[col0 + mi] = row[col0 + mi] + raw
    if modular:
        p = field.p
        rows = [[v % p for v in row] for row in rows]
    basis = nullspace_raw(rows, field, width)
    out = []
    for vec in basis:
        entries = []
        for idx in range(a):
            terms = {}
            for mi, m in enumerate(mons_u):
                v = vec[idx * mu + mi]
                if v:
                    terms[m] = field.element(v) if modular else v
            entries.append(Form(field, n, d_u, terms))
        out.append(FormVector(field, n, d_u, entries))
    return out


def normalize_leading(u: FormVector) -> FormVector:
    """Scale so the first nonzero coefficient (monomial order, then entry index) is 1."""
    for m in monomials(u.n, u.degree):
        for f in u.entries:
            c = f.terms.get(m)
            if c:
                if c == u.field.one:
                    return u
                return u.scale(u.field.one / c)
    raise ValueError("cannot normalize the zero vector")


def rank1_factor(x: FormMatrix) -> tuple[FormVector, FormVector]:
    """Factor a rank-1 matrix as u @ v^t with u primitive and lead-normalized.

    The primitive factor is found as the lowest degree at which the column
    proportionality system has a solution; that solution space is then
    one-dimensional.  Raises NotRankOne if the matrix does not have symbolic
    rank 1.
    """
    if x.rank_over_K() != 1:
        raise NotRankOne("rank-1 factorization needs a matrix of rank exactly 1")
    field = x.field
    if x.nrows == 1 and x.ncols == 1:
        # Degenerate case: split off the leading coefficient as the content.
        f = x.entries[0][0]
        lead = next(f.terms[m] for m in monomials(x.n, x.degree) if m in f.terms)
        u = FormVector(field, x.n, x.degree, [f.scale(field.one / lead)])
        v = FormVector(field, x.n, 0, [Form.constant(field, x.n, lead)])
        return u, v
    for d_u in range(x.degree + 1):
        basis = _proportionality_kernel(x, d_u)
        if not basis:
            continue
        if len(basis) > 1:
            raise InternalContradiction(
                f"proportionality space at degree {d_u} has dimension {len(basis)}"
            )
        u = normalize_leading(basis[0])
        i0 = next(i for i, f in enumerate(u.entries) if not f.is_zero())
        v_entries = [exact_divide(x.entries[i0][j], u[i0]) for j in range(x.ncols)]
        v = FormVector(field, x.n, x.degree - d_u, v_entries)
        return u, v
    raise InternalContradiction("no factorization degree found for a rank-1 matrix")


def cramer_vectors(x: FormMatrix) -> tuple[FormVector, FormVector]:
    """Nonzero u, v with x @ u = 0 and v^t @ x = 0 for a square matrix of corank 1.

    Obtained by factoring the adjugate as u @ v^t; for a homogeneous matrix
    of degree d and size r+1 the degrees satisfy deg u + deg v = d*r.
    """
    if x.nrows != x.ncols:
        raise WrongRank("kernel vectors need a square matrix")
    r = x.nrows - 1
    if x.rank_over_K() != r:
        raise WrongRank(f"matrix must have rank {r}")
    return rank1_factor(x.adjugate())


def random_linear_matrix(field: Field, n: int, rng: Random,
                         nrows: int = 3, ncols: int = 3) -> FormMatrix:
    """Dense random matrix of linear forms in n variables."""
    return FormMatrix.from_linforms(
        [[random_linform(field, n, rng) for _ in range(ncols)] for _ in range(nrows)]
    )
