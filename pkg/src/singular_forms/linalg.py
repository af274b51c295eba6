"""Deterministic exact linear algebra over Q and GF(p).

Row reduction follows one fixed convention everywhere: columns are scanned
left to right and the pivot is the first nonzero entry below the previous
pivot row.  Over the rationals the elimination is fraction-free (integer
cross-multiplication with per-row gcd reduction), so no division happens
until the final pivot normalization.  Over GF(p) rows are plain ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from random import Random
from typing import Iterable, Optional, Sequence

from .errors import SingularMatrix
from .fields import Field, PrimeField, QQ, RationalField, Scalar


def _rref_gf(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """In-place reduced row echelon form over GF(p); returns (rows, pivot columns)."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            rows[r] = prow = [v * inv % p for v in prow]
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [(a - f * b) % p for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def _reduce_int_row(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return [v // g for v in row]
    return row


def _rref_q(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q via fraction-free elimination."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    work: list[list[int]] = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        if den == 1:
            work.append(_reduce_int_row([x.numerator for x in row]))
        else:
            work.append(_reduce_int_row(
                [x.numerator * (den // x.denominator) for x in row]
            ))
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        lead = prow[c]
        for i in range(m):
            if i != r:
                f = work[i][c]
                if f:
                    ri = work[i]
                    work[i] = _reduce_int_row([a * lead - f * b for a, b in zip(ri, prow)])
        pivots.append(c)
        r += 1
        if r == m:
            break
    out: list[list[Fraction]] = []
    zero = Fraction(0)
    for idx, row in enumerate(work):
        if idx < len(pivots):
            lead = row[pivots[idx]]
            out.append([Fraction(v, lead) if v else zero for v in row])
        else:
            out.append([zero] * ncols)
    return out, pivots


def rref_raw(rows: list[list], field: Field) -> tuple[list[list], list[int]]:
    """RREF on raw rows (ints over GF(p), Fractions over Q). Consumes its input."""
    if isinstance(field, PrimeField):
        return _rref_gf(rows, field.p)
    return _rref_q(rows)


def nullspace_raw(rows: list[list], field: Field, ncols: int) -> list[list]:
    """Basis of the right kernel, as raw coefficient lists of length ``ncols``.

    Basis vectors are indexed by the free columns in increasing order; the
    vector for free column f has entry 1 there and zeros at the other free
    columns, which makes the output canonical for a fixed input.
    """
    red, pivots = rref_raw(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    modular = isinstance(field, PrimeField)
    zero, one = (0, 1) if modular else (Fraction(0), Fraction(1))
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for r, c in enumerate(pivots):
            v = red[r][f]
            if v:
                vec[c] = (-v) % field.p if modular else -v
        basis.append(vec)
    return basis


class ConstMatrix:
    """Immutable matrix of exact scalars over a fixed field."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, entries: Iterable[Iterable]):
        grid = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        self.field = field
        self.nrows = len(grid)
        self.ncols = len(grid[0]) if grid else 0
        for row in grid:
            if len(row) != self.ncols:
                raise ValueError("ragged rows in matrix")
        self.entries = grid

    @classmethod
    def identity(cls, field: Field, size: int) -> "ConstMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "ConstMatrix":
        return cls(field, [[0] * ncols for _ in range(nrows)])

    @classmethod
    def column(cls, field: Field, values: Sequence) -> "ConstMatrix":
        return cls(field, [[v] for v in values])

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def column_values(self) -> tuple:
        if self.ncols != 1:
            raise ValueError("not a column vector")
        return tuple(row[0] for row in self.entries)

    def transpose(self) -> "ConstMatrix":
        return ConstMatrix(self.field, zip(*self.entries)) if self.entries else \
            ConstMatrix.zeros(self.field, self.ncols, self.nrows)

    def __matmul__(self, other: "ConstMatrix") -> "ConstMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        cols = other.transpose().entries
        return ConstMatrix(self.field, [
            [sum((a * b for a, b in zip(row, col)), self.field.zero) for col in cols]
            for row in self.entries
        ])

    def __add__(self, other: "ConstMatrix") -> "ConstMatrix":
        return ConstMatrix(self.field, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)
        ])

    def __sub__(self, other: "ConstMatrix") -> "ConstMatrix":
        return ConstMatrix(self.field, [
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)
        ])

    def __neg__(self) -> "ConstMatrix":
        return ConstMatrix(self.field, [[-a for a in row] for row in self.entries])

    def scale(self, c) -> "ConstMatrix":
        c = self.field.coerce(c)
        return ConstMatrix(self.field, [[c * a for a in row] for row in self.entries])

    def __eq__(self, other):
        if not isinstance(other, ConstMatrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def _raw_rows(self) -> list[list]:
        if isinstance(self.field, PrimeField):
            return [[x.val for x in row] for row in self.entries]
        return [list(row) for row in self.entries]

    def _wrap(self, v) -> Scalar:
        if isinstance(self.field, PrimeField):
            return self.field.element(v)
        return v

    def rref(self) -> tuple["ConstMatrix", tuple[int, ...]]:
        rows, pivots = rref_raw(self._raw_rows(), self.field)
        return ConstMatrix(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        _, pivots = rref_raw(self._raw_rows(), self.field)
        return len(pivots)

    def nullspace(self) -> list["ConstMatrix"]:
        """Basis of {x : self @ x = 0} as column vectors; empty list for full column rank."""
        basis = nullspace_raw(self._raw_rows(), self.field, self.ncols)
        return [ConstMatrix.column(self.field, vec) for vec in basis]

    def invert(self) -> "ConstMatrix":
        if self.nrows != self.ncols:
            raise SingularMatrix("only square matrices can be inverted")
        n = self.nrows
        aug = self._raw_rows()
        if isinstance(self.field, PrimeField):
            ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            one, zero = Fraction(1), Fraction(0)
            ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for row, ext in zip(aug, ident):
            row.extend(ext)
        red, pivots = rref_raw(aug, self.field)
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise SingularMatrix(f"matrix of rank {len([p for p in pivots if p < n])} is singular")
        return ConstMatrix(self.field, [row[n:] for row in red])

    def solve_right(self, rhs: "ConstMatrix") -> Optional["ConstMatrix"]:
        """One exact solution X of self @ X = rhs (free variables zero), or None."""
        if rhs.nrows != self.nrows:
            raise ValueError("right-hand side has wrong height")
        n, k = self.ncols, rhs.ncols
        aug = self._raw_rows()
        for row, ext in zip(aug, rhs._raw_rows()):
            row.extend(ext)
        red, pivots = rref_raw(aug, self.field)
        if any(c >= n for c in pivots):
            return None
        if isinstance(self.field, PrimeField):
            sol = [[0] * k for _ in range(n)]
        else:
            sol = [[Fraction(0)] * k for _ in range(n)]
        for r, c in enumerate(pivots):
            sol[c] = red[r][n:]
        return ConstMatrix(self.field, sol)

    def det(self) -> Scalar:
        """Exact determinant by cofactor expansion (intended for small sizes)."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return _det_rows(self.entries, self.field)

    def to_lists(self) -> list[list[str]]:
        return [[self.field.to_str(x) for x in row] for row in self.entries]

    @classmethod
    def from_lists(cls, field: Field, data: Sequence[Sequence]) -> "ConstMatrix":
        return cls(field, [[field.parse(x) for x in row] for row in data])

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(x) for x in row) for row in self.entries)
        return f"ConstMatrix[{body}]"


def _det_rows(rows, field):
    n = len(rows)
    if n == 0:
        return field.one
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = field.zero
    first = rows[0]
    rest = rows[1:]
    for j in range(n):
        if not first[j]:
            continue
        minor = [tuple(row[k] for k in range(n) if k != j) for row in rest]
        term = first[j] * _det_rows(minor, field)
        total = total + term if j % 2 == 0 else total - term
    return total


def random_matrix(nrows: int, ncols: int, field: Field, rng: Random) -> ConstMatrix:
    return ConstMatrix(field, [[field.random(rng) for _ in range(ncols)] for _ in range(nrows)])


def random_invertible_rng(size: int, field: Field, rng: Random) -> ConstMatrix:
    """Random invertible matrix drawn entrywise, retrying while singular."""
    while True:
        m = random_matrix(size, size, field, rng)
        if m.rank() == size:
            return m


def random_invertible(size: int, field: Field, seed: int) -> ConstMatrix:
    return random_invertible_rng(size, field, Random(seed))
