from fractions import Fraction
from random import Random

import pytest

from singular_forms.errors import DegreeNotOne, NotRankOne, WrongRank
from singular_forms.fields import PrimeField, QQ
from singular_forms.forms import Form, FormVector, LinForm
from singular_forms.form_matrix import (
    FormMatrix,
    cramer_vectors,
    outer_product,
    random_linear_matrix,
    rank1_factor,
)
from singular_forms.linalg import ConstMatrix, random_invertible

GF = PrimeField(32003)
FIELDS = (QQ, GF)


def x(t, n=3, field=QQ):
    return LinForm.variable(field, n, t)


def zero(n=3, field=QQ):
    return LinForm.zero(field, n)


def eq_one_second_matrix(field=QQ):
    v = [LinForm.variable(field, 5, t) for t in range(1, 6)]
    z = LinForm.zero(field, 5)
    return FormMatrix.from_linforms([[v[0], v[1], v[2]], [v[3], z, z], [v[4], z, z]])


def eq_one_first_matrix(field=QQ):
    a = LinForm.variable(field, 2, 1)
    b = LinForm.variable(field, 2, 2)
    return FormMatrix.from_linforms([[a, a], [b, b]])


def alternating(u1, u2, u3):
    z = Form.zero(u1.field, u1.n, 1)
    return FormMatrix(u1.field, u1.n, 1, [
        [z, u3.to_form(), (-u2).to_form()],
        [(-u3).to_form(), z, u1.to_form()],
        [u2.to_form(), (-u1).to_form(), z],
    ])


def diag_matrix(forms):
    n, field = forms[0].n, forms[0].field
    z = Form.zero(field, n, 1)
    size = len(forms)
    return FormMatrix(field, n, 1, [
        [forms[i].to_form() if i == j else z for j in range(size)] for i in range(size)
    ])


def test_determinant_of_singular_fixtures():
    assert eq_one_second_matrix().determinant().is_zero()
    assert eq_one_first_matrix().determinant().is_zero()
    # Alternating layout with entries x1, x2, x3 as displayed in the zoo of
    # vanishing-determinant patterns.
    a = alternating(x(3), x(2), x(1))
    assert a.determinant().is_zero()


def test_determinant_of_diagonal():
    d = diag_matrix([x(1), x(2), x(3)])
    assert d.determinant() == x(1) * x(2) * x(3)


def test_adjugate_of_diagonal():
    d = diag_matrix([x(1), x(2), x(3)])
    adj = d.adjugate()
    assert adj[0, 0] == x(2) * x(3)
    assert adj[1, 1] == x(1) * x(3)
    assert adj[2, 2] == x(1) * x(2)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert adj[i, j].is_zero()


def naive_adjugate_entry(m, i, j):
    # Direct transcription of the convention: (-1)^(i+j) times the
    # determinant of the 2x2 matrix left after deleting column i and row j.
    rows = [r for r in range(3) if r != j]
    cols = [c for c in range(3) if c != i]
    det = (m[rows[0], cols[0]] * m[rows[1], cols[1]]
           - m[rows[0], cols[1]] * m[rows[1], cols[0]])
    return det if (i + j) % 2 == 0 else -det


def test_adjugate_of_alternating_is_rank_one_square():
    a = alternating(x(1), x(2), x(3))
    adj = a.adjugate()
    w = [x(1), x(2), x(3)]
    for i in range(3):
        for j in range(3):
            assert adj[i, j] == naive_adjugate_entry(a, i, j)
            assert adj[i, j] == w[i].to_form() * w[j].to_form()


def test_adjugate_of_constant_matrix():
    c2 = Form.constant(QQ, 1, 2)
    c3 = Form.constant(QQ, 1, 3)
    c4 = Form.constant(QQ, 1, 4)
    z = Form.zero(QQ, 1, 0)
    m = FormMatrix(QQ, 1, 0, [[c2, z, z], [z, c3, z], [z, z, c4]])
    adj = m.adjugate()
    assert adj[0, 0] == Form.constant(QQ, 1, 12)
    assert adj[1, 1] == Form.constant(QQ, 1, 8)
    assert adj[2, 2] == Form.constant(QQ, 1, 6)
    det = m.determinant()
    prod00 = sum((m[0, k] * adj[k, 0] for k in range(1, 3)), m[0, 0] * adj[0, 0])
    assert prod00 == det


@pytest.mark.parametrize("field", FIELDS)
def test_adjugate_identity_on_random_matrices(field):
    rng = Random(1)
    for i in range(25):
        m = random_linear_matrix(field, 1 + i % 5, rng)
        det = m.determinant()
        adj = m.adjugate()
        for a in range(3):
            for b in range(3):
                entry = sum((m[a, k] * adj[k, b] for k in range(1, 3)), m[a, 0] * adj[0, b])
                if a == b:
                    assert entry == det
                else:
                    assert entry.is_zero()


def test_rank_over_k():
    assert eq_one_first_matrix().rank_over_K() == 1
    assert eq_one_second_matrix().rank_over_K() == 2
    assert FormMatrix.zero(QQ, 3, 1, 3, 3).rank_over_K() == 0
    assert diag_matrix([x(1), x(2), x(3)]).rank_over_K() == 3


@pytest.mark.parametrize("field", FIELDS)
def test_rank_over_k_matches_rank_at_random_point(field):
    rng = Random(13)
    for i in range(20):
        m = random_linear_matrix(field, 1 + i % 4, rng)
        point = [field.random(rng) for _ in range(m.n)]
        assert m.evaluate(point).rank() <= m.rank_over_K()
    # Rank-deficient fixtures evaluate to rank-deficient constant matrices.
    fix = eq_one_second_matrix()
    assert fix.evaluate([1, 2, 3, 4, 5]).rank() <= 2


def test_kernel_at_degree_of_alternating():
    a = alternating(x(1), x(2), x(3))
    basis = a.kernel_at_degree(1)
    assert len(basis) == 1
    u = basis[0]
    coeffs = ConstMatrix(QQ, [f.as_linform().coeffs for f in u.entries])
    expected = ConstMatrix(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    # The kernel is spanned by (x1, x2, x3) up to one scalar.
    stacked = ConstMatrix(QQ, list(coeffs.entries) + list(expected.entries))
    assert stacked.rank() == 3


def test_kernel_at_degree_constant_cases():
    assert eq_one_second_matrix().kernel_at_degree(0) == []
    basis = eq_one_first_matrix().kernel_at_degree(0)
    assert len(basis) == 1
    vals = [f.coefficient((0, 0)) for f in basis[0].entries]
    assert vals[0] == -vals[1] and vals[0] != 0


def test_kernel_vectors_annihilate():
    rng = Random(2)
    for field in FIELDS:
        for i in range(10):
            m = random_linear_matrix(field, 2 + i % 3, rng)
            for d in (0, 1):
                for u in m.kernel_at_degree(d):
                    assert m.mul_vector(u).is_zero()


def test_rank1_factor_equal_columns():
    m = eq_one_first_matrix()
    u, v = rank1_factor(m)
    a = LinForm.variable(QQ, 2, 1)
    b = LinForm.variable(QQ, 2, 2)
    assert u.entries == (a.to_form(), b.to_form())
    one = Form.constant(QQ, 2, 1)
    assert v.entries == (one, one)
    assert outer_product(u, v) == m


def test_rank1_factor_symmetric_square():
    w = [x(1), x(2), x(3)]
    m = outer_product(FormVector.from_linforms(w), FormVector.from_linforms(w))
    u, v = rank1_factor(m)
    assert u == FormVector.from_linforms(w)
    assert v == FormVector.from_linforms(w)


def test_rank1_factor_one_by_one():
    m = FormMatrix.from_linforms([[x(1).scale(2)]])
    u, v = rank1_factor(m)
    assert u.entries[0] == x(1).to_form()
    assert v.entries[0] == Form.constant(QQ, 3, 2)


def test_rank1_factor_single_row():
    m = FormMatrix.from_linforms([[x(1), x(2)]])
    u, v = rank1_factor(m)
    assert u.degree == 0 and v.degree == 1
    assert outer_product(u, v) == m


def test_rank1_factor_rejects_other_ranks():
    with pytest.raises(NotRankOne):
        rank1_factor(diag_matrix([x(1), x(2), x(3)]))
    with pytest.raises(NotRankOne):
        rank1_factor(FormMatrix.zero(QQ, 3, 1, 2, 2))


@pytest.mark.parametrize("field", FIELDS)
def test_rank1_factor_roundtrip_random(field):
    from singular_forms.forms import random_form

    rng = Random(77)
    for i in range(30):
        n = 1 + i % 3
        du, dv = [(0, 1), (1, 0), (1, 1)][i % 3]
        u = FormVector(field, n, du, [random_form(field, n, du, rng) for _ in range(2)])
        v = FormVector(field, n, dv, [random_form(field, n, dv, rng) for _ in range(3)])
        if u.is_zero() or v.is_zero():
            continue
        m = outer_product(u, v)
        uu, vv = rank1_factor(m)
        assert outer_product(uu, vv) == m
        assert uu.degree + vv.degree == m.degree


def test_cramer_vectors_alternating():
    a = alternating(x(1), x(2), x(3))
    u, v = cramer_vectors(a)
    w = FormVector.from_linforms([x(1), x(2), x(3)])
    assert u == w and v == w
    assert u.degree + v.degree == 2


def test_cramer_vectors_contract_on_fixture():
    m = eq_one_second_matrix()
    u, v = cramer_vectors(m)
    assert not u.is_zero() and not v.is_zero()
    assert m.mul_vector(u).is_zero()
    assert m.vec_mul_left(v).is_zero()
    assert u.degree + v.degree == 2


def test_cramer_vectors_explicit_zero_row_structure():
    z = zero()
    m = FormMatrix.from_linforms([[x(1), z, z], [z, x(2), z], [z, z, z]])
    u, v = cramer_vectors(m)
    assert u.degree == 0
    vals = [f.coefficient((0, 0, 0)) for f in u.entries]
    assert vals[0] == 0 and vals[1] == 0 and vals[2] == 1
    assert m.mul_vector(u).is_zero()
    assert m.vec_mul_left(v).is_zero()


def test_cramer_vectors_requires_corank_one():
    with pytest.raises(WrongRank):
        cramer_vectors(diag_matrix([x(1), x(2), x(3)]))
    w = FormVector.from_linforms([x(1), x(2), x(3)])
    with pytest.raises(WrongRank):
        cramer_vectors(outer_product(w, w))


def test_coefficient_matrix_rows_and_cols():
    m = eq_one_second_matrix()
    rows = m.coefficient_matrix("rows")
    cols = m.coefficient_matrix("cols")
    assert rows.nrows == 3 and rows.ncols == 15
    assert rows.rank() == 3
    assert cols.rank() == 3


def test_coefficient_matrix_zero_row_pattern():
    z = zero()
    m = FormMatrix.from_linforms([[x(1), x(2), x(3)], [x(2), x(3), x(1)], [z, z, z]])
    cm = m.coefficient_matrix("rows")
    assert all(not v for v in cm.row(2))
    assert cm.rank() <= 2


def test_coefficient_matrix_generic_rank_three():
    rng = Random(4)
    m = random_linear_matrix(QQ, 4, rng)
    assert m.coefficient_matrix("rows").rank() == 3


def test_coefficient_matrix_requires_degree_one():
    sq = outer_product(
        FormVector.from_linforms([x(1), x(2)]), FormVector.from_linforms([x(1), x(2)])
    )
    with pytest.raises(DegreeNotOne):
        sq.coefficient_matrix("rows")


@pytest.mark.parametrize("field", FIELDS)
def test_determinant_is_multiplicative_under_constant_action(field):
    rng = Random(8)
    for i in range(15):
        m = random_linear_matrix(field, 1 + i % 4, rng)
        f = random_invertible(3, field, seed=100 + i)
        g = random_invertible(3, field, seed=200 + i)
        lhs = m.const_left(f).const_right(g).determinant()
        rhs = m.determinant().scale(f.det() * g.det())
        assert lhs == rhs


def test_matrix_json_roundtrip():
    m = eq_one_second_matrix()
    again = FormMatrix.from_json(QQ, m.to_json())
    assert again == m
    with pytest.raises(ValueError):
        FormMatrix.from_json(QQ, {"n": 5, "rows": 3, "cols": 3, "entries": [[["1"]]]})
