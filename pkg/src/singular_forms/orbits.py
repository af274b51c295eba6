"""Stabilizer Lie algebras and orbit dimensions of the four normal-form families.

The group GL3 x GL3 acts on 3x3 matrices of linear forms by
(f, g) . m = f m g^t.  For each normal-form family L (zero row, zero square,
antisymmetric, zero column) the stabilizer dimension is computed at the Lie
algebra level, as the nullspace of the linear condition
a M + M b^t in L for every M in a spanning set of L; the orbit dimension is
then dim L + (18 - dim stabilizer).
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .classifier import ComponentTag
from .errors import InternalContradiction
from .fields import Field, QQ
from .forms import Form, LinForm, random_linform
from .form_matrix import FormMatrix
from .linalg import ConstMatrix, random_invertible_rng


_FREE_POSITIONS = {
    ComponentTag.ZERO_ROW: [(i, j) for i in (0, 1) for j in (0, 1, 2)],
    ComponentTag.ZERO_COLUMN: [(i, j) for i in (0, 1, 2) for j in (0, 1)],
    ComponentTag.ZERO_SQUARE: [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)],
}

_ZERO_CONSTRAINTS = {
    ComponentTag.ZERO_ROW: [(2, 0), (2, 1), (2, 2)],
    ComponentTag.ZERO_COLUMN: [(0, 2), (1, 2), (2, 2)],
    ComponentTag.ZERO_SQUARE: [(1, 1), (1, 2), (2, 1), (2, 2)],
}


@dataclass(frozen=True)
class StabilizerReport:
    tag: ComponentTag
    n: int
    linear_space_dim: int
    stab_lie_dim: int
    orbit_dim: int

    def to_json(self) -> dict:
        return {
            "tag": self.tag.value,
            "n": self.n,
            "linear_space_dim": self.linear_space_dim,
            "stab_lie_dim": self.stab_lie_dim,
            "orbit_dim": self.orbit_dim,
        }


def _alternating_from_parts(field: Field, n: int, parts: list[LinForm]) -> FormMatrix:
    """Alternating matrix with independent slots u1, u2, u3, matching the
    classifier's normal form rows (0, u3, -u2), (-u3, 0, u1), (u2, -u1, 0)."""
    u1, u2, u3 = (f.to_form() for f in parts)
    z = Form.zero(field, n, 1)
    return FormMatrix(field, n, 1, [[z, u3, -u2], [-u3, z, u1], [u2, -u1, z]])


def component_basis(tag: ComponentTag, n: int, field: Field = QQ) -> list[FormMatrix]:
    """Spanning matrices of the linear family: one per free slot and variable."""
    out = []
    if tag is ComponentTag.ANTISYMMETRIC:
        for slot in range(3):
            for t in range(1, n + 1):
                parts = [LinForm.zero(field, n)] * 3
                parts[slot] = LinForm.variable(field, n, t)
                out.append(_alternating_from_parts(field, n, parts))
        return out
    zero = Form.zero(field, n, 1)
    for (i, j) in _FREE_POSITIONS[tag]:
        for t in range(1, n + 1):
            grid = [[zero] * 3 for _ in range(3)]
            grid[i][j] = LinForm.variable(field, n, t).to_form()
            out.append(FormMatrix(field, n, 1, grid))
    return out


def _flatten(m: FormMatrix) -> list:
    coeffs = []
    for f in m.all_linforms():
        coeffs.extend(f.coeffs)
    return coeffs


def linear_space_dim(tag: ComponentTag, n: int) -> int:
    """Projective dimension of the linear family: 6n-1, 5n-1, 3n-1, 6n-1.

    Cross-checked by counting the rank of an explicit spanning set.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    basis = component_basis(tag, n, QQ)
    rank = ConstMatrix(QQ, [_flatten(m) for m in basis]).rank()
    if rank != len(basis):
        raise InternalContradiction("spanning set of the linear family is dependent")
    return rank - 1


def _stabilizer_rows(m: FormMatrix, positions, paired) -> list[list]:
    """Constraint rows (over the scalar field) in the 18 unknowns (a, b).

    The coefficient of a_{il} inside (a M + M b^t)_{ij} is M[l][j], the
    coefficient of b_{jl} is M[i][l]; each constrained entry (and, in the
    alternating case, each symmetric pair sum) contributes one linear form,
    i.e. n scalar rows.
    """
    field = m.field
    n = m.n
    rows = []
    for group in positions:
        acc = [[field.zero] * 18 for _ in range(n)]
        cells = group if paired else [group]
        for (i, j) in cells:
            for l in range(3):
                for t, c in enumerate(m.entries[l][j].as_linform().coeffs):
                    if c:
                        acc[t][3 * i + l] = acc[t][3 * i + l] + c
                for t, c in enumerate(m.entries[i][l].as_linform().coeffs):
                    if c:
                        acc[t][9 + 3 * j + l] = acc[t][9 + 3 * j + l] + c
        rows.extend(acc)
    return rows


def stabilizer_lie_dim(tag: ComponentTag, n: int, field: Field = QQ) -> int:
    """Dimension of {(a, b) in gl3 + gl3 : a M + M b^t stays in the family}."""
    if n < 2:
        raise ValueError("stabilizer dimensions are computed for n >= 2")
    basis = component_basis(tag, n, field)
    if tag is ComponentTag.ANTISYMMETRIC:
        positions = [[(i, i)] for i in range(3)]
        positions += [[(i, j), (j, i)] for i in range(3) for j in range(i + 1, 3)]
        paired = True
    else:
        positions = _ZERO_CONSTRAINTS[tag]
        paired = False
    rows = []
    for m in basis:
        rows.extend(_stabilizer_rows(m, positions, paired))
    return 18 - ConstMatrix(field, rows).rank()


def orbit_dim(tag: ComponentTag, n: int) -> int:
    """Orbit-closure dimension: family dimension plus stabilizer codimension."""
    if n < 2:
        raise ValueError("orbit dimensions are computed for n >= 2")
    return linear_space_dim(tag, n) + (18 - stabilizer_lie_dim(tag, n, QQ))


def stabilizer_report(tag: ComponentTag, n: int, field: Field = QQ) -> StabilizerReport:
    lin = linear_space_dim(tag, n)
    stab = stabilizer_lie_dim(tag, n, field)
    return StabilizerReport(tag, n, lin, stab, lin + (18 - stab))


def sample_component_rng(tag: ComponentTag, n: int, field: Field, rng: Random) -> FormMatrix:
    """Random member of the orbit: a random point of the family moved by a
    random pair (f, g) acting as f m g^t; the determinant always vanishes."""
    if n < 1:
        raise ValueError("need n >= 1")
    while True:
        if tag is ComponentTag.ANTISYMMETRIC:
            parts = [random_linform(field, n, rng) for _ in range(3)]
            m = _alternating_from_parts(field, n, parts)
        else:
            zero = Form.zero(field, n, 1)
            grid = [[zero] * 3 for _ in range(3)]
            for (i, j) in _FREE_POSITIONS[tag]:
                grid[i][j] = random_linform(field, n, rng).to_form()
            m = FormMatrix(field, n, 1, grid)
        if not m.is_zero():
            break
    f = random_invertible_rng(3, field, rng)
    g = random_invertible_rng(3, field, rng)
    return m.const_left(f).const_right(g.transpose())


def sample_component(tag: ComponentTag, n: int, field: Field, seed: int) -> FormMatrix:
    return sample_component_rng(tag, n, field, Random(seed))
