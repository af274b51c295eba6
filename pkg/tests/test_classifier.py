from random import Random

import pytest

from singular_forms.classifier import (
    ClassificationReport,
    ComponentTag,
    Witness,
    classify,
    matches_pattern,
    reduce_variables,
    span_bound_check,
    verify_witness,
)
from singular_forms.errors import WrongShape
from singular_forms.fields import PrimeField, QQ
from singular_forms.forms import Form, LinForm, coefficient_span_dim
from singular_forms.form_matrix import FormMatrix, random_linear_matrix
from singular_forms.linalg import ConstMatrix, random_invertible
from singular_forms.orbits import sample_component, sample_component_rng

GF = PrimeField(32003)
FIELDS = (QQ, GF)
ALL_TAGS = tuple(ComponentTag)


def x(t, n=3, field=QQ):
    return LinForm.variable(field, n, t)


def eq_one_second_matrix(field=QQ):
    v = [LinForm.variable(field, 5, t) for t in range(1, 6)]
    z = LinForm.zero(field, 5)
    return FormMatrix.from_linforms([[v[0], v[1], v[2]], [v[3], z, z], [v[4], z, z]])


def alternating_normal_form(field=QQ, n=3):
    u = [LinForm.variable(field, n, t) for t in range(1, 4)]
    z = Form.zero(field, n, 1)
    return FormMatrix(field, n, 1, [
        [z, u[2].to_form(), (-u[1]).to_form()],
        [(-u[2]).to_form(), z, u[0].to_form()],
        [u[1].to_form(), (-u[0]).to_form(), z],
    ])


def test_zero_square_fixture_classifies_in_place():
    report = classify(eq_one_second_matrix())
    assert report.is_singular
    assert not report.in_R and not report.in_C
    assert report.effective_n == 5
    w = report.witness
    assert w is not None and w.tag is ComponentTag.ZERO_SQUARE
    # The fixture already carries the zero square, and the deterministic
    # construction leaves it untouched.
    assert w.f == ConstMatrix.identity(QQ, 3)
    assert w.g == ConstMatrix.identity(QQ, 3)
    assert verify_witness(eq_one_second_matrix(), w)


def test_alternating_normal_form_classifies_in_place():
    m = alternating_normal_form()
    report = classify(m)
    w = report.witness
    assert w.tag is ComponentTag.ANTISYMMETRIC
    assert w.f == ConstMatrix.identity(QQ, 3)
    assert w.g == ConstMatrix.identity(QQ, 3)
    assert w.normal_form == m


def test_seeded_group_translate_of_alternating():
    m = alternating_normal_form(GF)
    f0 = random_invertible(3, GF, seed=11)
    g0 = random_invertible(3, GF, seed=12)
    moved = m.const_left(f0).const_right(g0)
    report = classify(moved)
    assert report.witness.tag is ComponentTag.ANTISYMMETRIC
    assert verify_witness(moved, report.witness)


def test_equal_columns_classify_as_zero_column():
    v = [LinForm.variable(QQ, 5, t) for t in range(1, 6)]
    m = FormMatrix.from_linforms([
        [v[0], v[0], v[2]],
        [v[1], v[1], v[3]],
        [v[2], v[2], v[4]],
    ])
    report = classify(m)
    assert report.in_C and not report.in_R
    assert report.witness.tag is ComponentTag.ZERO_COLUMN
    assert verify_witness(m, report.witness)


def test_equal_rows_classify_as_zero_row():
    v = [LinForm.variable(QQ, 5, t) for t in range(1, 6)]
    m = FormMatrix.from_linforms([
        [v[0], v[1], v[2]],
        [v[0], v[1], v[2]],
        [v[3], v[4], v[0]],
    ])
    report = classify(m)
    assert report.in_R
    assert report.witness.tag is ComponentTag.ZERO_ROW
    assert verify_witness(m, report.witness)
    assert all(f.is_zero() for f in report.witness.normal_form.entries[2])


def test_zero_matrix_reports_without_witness():
    m = FormMatrix.zero(QQ, 3, 1, 3, 3)
    report = classify(m)
    assert report.is_singular
    assert report.in_R and report.in_C
    assert report.witness is None
    assert report.effective_n == 0


def test_nonsingular_matrix_reports_without_witness():
    m = FormMatrix.from_linforms([
        [x(1), LinForm.zero(QQ, 3), LinForm.zero(QQ, 3)],
        [LinForm.zero(QQ, 3), x(2), LinForm.zero(QQ, 3)],
        [LinForm.zero(QQ, 3), LinForm.zero(QQ, 3), x(3)],
    ])
    report = classify(m)
    assert not report.is_singular
    assert report.witness is None
    assert not report.in_R and not report.in_C


def test_wrong_shape_rejected():
    with pytest.raises(WrongShape):
        classify(FormMatrix.zero(QQ, 3, 1, 2, 3))
    w = FormMatrix.from_linforms([[x(1)]])
    sq = FormMatrix(QQ, 3, 2, [[w[0, 0] * w[0, 0]] * 3] * 3)
    with pytest.raises(WrongShape):
        classify(sq)


@pytest.mark.parametrize("field", FIELDS)
@pytest.mark.parametrize("tag", ALL_TAGS)
def test_sampled_orbits_get_verified_witnesses(field, tag):
    rng = Random(1234)
    for n in (2, 3, 4):
        for _ in range(25):
            m = sample_component_rng(tag, n, field, rng)
            report = classify(m)
            assert report.is_singular
            assert report.witness is not None
            assert verify_witness(m, report.witness)


@pytest.mark.parametrize("field", FIELDS)
def test_membership_flags_match_constant_kernels(field):
    rng = Random(555)
    for tag in ALL_TAGS:
        for _ in range(10):
            m = sample_component_rng(tag, 3, field, rng)
            assert (m.coefficient_matrix("rows").rank() <= 2) == \
                bool(m.transpose().kernel_at_degree(0))
            assert (m.coefficient_matrix("cols").rank() <= 2) == \
                bool(m.kernel_at_degree(0))


def test_tag_stable_under_group_action():
    rng = Random(777)
    for field in FIELDS:
        for tag in (ComponentTag.ANTISYMMETRIC, ComponentTag.ZERO_SQUARE):
            for i in range(10):
                m = sample_component_rng(tag, 3, field, rng)
                report = classify(m)
                if report.in_R or report.in_C:
                    continue
                f0 = random_invertible(3, field, seed=3000 + i)
                g0 = random_invertible(3, field, seed=4000 + i)
                moved = m.const_left(f0).const_right(g0)
                assert classify(moved).witness.tag is report.witness.tag


def test_verify_witness_rejects_bad_witnesses():
    m = eq_one_second_matrix()
    good = classify(m).witness
    singular_f = ConstMatrix(QQ, [[1, 0, 0], [1, 0, 0], [0, 0, 1]])
    assert not verify_witness(m, Witness(singular_f, good.g, good.tag, good.normal_form))
    # Normal form violating the tag pattern.
    assert not verify_witness(m, Witness(good.f, good.g, ComponentTag.ZERO_ROW,
                                         good.normal_form))
    # Product mismatch.
    other = alternating_normal_form(QQ, 5)
    assert not verify_witness(m, Witness(good.f, good.g, good.tag, other))


def test_matches_pattern():
    z = Form.zero(QQ, 3, 1)
    zero_row = FormMatrix(QQ, 3, 1, [
        [x(1).to_form(), x(2).to_form(), x(3).to_form()],
        [x(2).to_form(), x(3).to_form(), x(1).to_form()],
        [z, z, z],
    ])
    assert matches_pattern(ComponentTag.ZERO_ROW, zero_row)
    assert not matches_pattern(ComponentTag.ZERO_COLUMN, zero_row)
    assert matches_pattern(ComponentTag.ANTISYMMETRIC, alternating_normal_form())
    assert matches_pattern(ComponentTag.ZERO_SQUARE, eq_one_second_matrix())


def test_reduce_variables_keeps_fixture():
    m = eq_one_second_matrix()
    reduced, eff = reduce_variables(m)
    assert eff == 5
    assert reduced == m
    assert classify(reduced).witness.tag is ComponentTag.ZERO_SQUARE


def test_reduce_variables_collapses_repeated_entry():
    f = x(1, n=4) + x(2, n=4)
    m = FormMatrix.from_linforms([[f, f, f]] * 3)
    reduced, eff = reduce_variables(m)
    assert eff == 1
    assert reduced.n == 1
    assert coefficient_span_dim(reduced.all_linforms()) == 1


def test_reduce_variables_zero_matrix():
    reduced, eff = reduce_variables(FormMatrix.zero(QQ, 3, 1, 3, 3))
    assert eff == 0
    assert reduced.n == 0 and reduced.is_zero()


def test_reduce_variables_preserves_classification():
    rng = Random(999)
    for tag in ALL_TAGS:
        m = sample_component_rng(tag, 5, GF, rng)
        reduced, eff = reduce_variables(m)
        assert eff <= 9
        a, b = classify(m), classify(reduced)
        assert a.is_singular == b.is_singular
        assert a.in_R == b.in_R and a.in_C == b.in_C
        if a.witness is not None:
            assert a.witness.tag is b.witness.tag


def test_span_bound_check():
    assert span_bound_check(eq_one_second_matrix())
    rng = Random(31415)
    wide = random_linear_matrix(GF, 9, rng)
    if coefficient_span_dim(wide.all_linforms()) >= 7:
        assert span_bound_check(wide)
    narrow = sample_component(ComponentTag.ZERO_ROW, 2, QQ, 5)
    assert span_bound_check(narrow)


def test_report_json_shape():
    report = classify(eq_one_second_matrix())
    data = report.to_json()
    assert data["singular"] is True
    assert data["tag"] == "zero-square"
    assert data["in_R"] is False and data["in_C"] is False
    assert data["effective_n"] == 5
    assert len(data["F"]) == 3 and len(data["G"]) == 3
    assert data["normal_form"]["rows"] == 3
    empty = classify(FormMatrix.zero(QQ, 3, 1, 3, 3)).to_json()
    assert empty["tag"] is None and empty["F"] is None


def test_component_tag_parse():
    assert ComponentTag.parse("zero_row") is ComponentTag.ZERO_ROW
    assert ComponentTag.parse("Antisymmetric") is ComponentTag.ANTISYMMETRIC
    with pytest.raises(ValueError):
        ComponentTag.parse("diagonal")
