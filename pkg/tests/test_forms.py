from fractions import Fraction
from itertools import product
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singular_forms.errors import NotDivisible
from singular_forms.fields import PrimeField, QQ
from singular_forms.forms import (
    Form,
    LinForm,
    coefficient_span_dim,
    exact_divide,
    monomial_count,
    monomials,
    random_form,
)

GF = PrimeField(32003)
FIELDS = (QQ, GF)


def x(t, n=3, field=QQ):
    return LinForm.variable(field, n, t)


def test_product_of_variables():
    p = x(1) * x(2)
    assert p.terms == {(1, 1, 0): Fraction(1)}
    assert p.degree == 2


def test_difference_of_squares():
    p = (x(1) + x(2)) * (x(1) - x(2))
    assert p == x(1) * x(1) - x(2) * x(2)
    assert p.terms == {(2, 0, 0): Fraction(1), (0, 2, 0): Fraction(-1)}


def test_zero_times_anything_tracks_degree():
    z = Form.zero(QQ, 3, 2)
    p = z * x(1).to_form()
    assert p.is_zero() and p.degree == 3


def test_exact_divide_examples():
    a = x(1) * x(1) + x(1) * x(2)
    q = exact_divide(a, x(1).to_form())
    assert q == (x(1) + x(2)).to_form()
    with pytest.raises(NotDivisible):
        exact_divide(x(1) * x(1), x(2).to_form())
    assert exact_divide(x(1) * x(2) * x(3), x(2) * x(3)) == x(1).to_form()


def test_exact_divide_zero_numerator():
    q = exact_divide(Form.zero(QQ, 3, 2), x(1).to_form())
    assert q.is_zero() and q.degree == 1


def brute_force_monomial_count(n, d):
    return sum(1 for e in product(range(d + 1), repeat=n) if sum(e) == d)


@pytest.mark.parametrize("n,d,expected", [(3, 3, 10), (1, 7, 1), (5, 2, 15)])
def test_monomial_count_against_enumeration(n, d, expected):
    assert monomial_count(n, d) == expected
    assert brute_force_monomial_count(n, d) == expected
    assert len(monomials(n, d)) == expected


def test_monomial_order_is_x1_first():
    assert monomials(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))


def test_monomial_count_low_degrees():
    for n in range(1, 11):
        assert monomial_count(n, 1) == n
        assert monomial_count(n, 2) == n * (n + 1) // 2


def test_coefficient_span_dim():
    assert coefficient_span_dim([x(1), x(2), x(1) + x(2)]) == 2
    assert coefficient_span_dim([LinForm.zero(QQ, 3)] * 4) == 0
    n5 = [LinForm.variable(QQ, 5, t) for t in range(1, 6)]
    zero = LinForm.zero(QQ, 5)
    entries = [n5[0], n5[1], n5[2], n5[3], zero, zero, n5[4], zero, zero]
    assert coefficient_span_dim(entries) == 5


@pytest.mark.parametrize("field", FIELDS)
def test_mul_commutative_and_associative(field):
    rng = Random(23)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = random_form(field, n, rng.randint(0, 2), rng)
        b = random_form(field, n, rng.randint(0, 2), rng)
        c = random_form(field, n, rng.randint(0, 2), rng)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("field", FIELDS)
def test_exact_divide_undoes_mul(field):
    rng = Random(29)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = random_form(field, n, rng.randint(0, 2), rng)
        while True:
            b = random_form(field, n, rng.randint(0, 2), rng)
            if not b.is_zero():
                break
        assert exact_divide(a * b, b) == a


@given(st.lists(st.fractions(), min_size=3, max_size=3),
       st.lists(st.fractions(), min_size=3, max_size=3))
def test_linform_addition_is_coefficientwise(a, b):
    fa, fb = LinForm(QQ, a), LinForm(QQ, b)
    assert (fa + fb).coeffs == tuple(p + q for p, q in zip(a, b))
    assert (fa - fb) + fb == fa


def test_distributivity():
    rng = Random(31)
    for field in FIELDS:
        for _ in range(50):
            a = random_form(field, 3, 1, rng)
            b = random_form(field, 3, 1, rng)
            c = random_form(field, 3, 1, rng)
            assert a * (b + c) == a * b + a * c


def test_form_rejects_inhomogeneous_terms():
    with pytest.raises(ValueError):
        Form(QQ, 2, 2, {(1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        Form(QQ, 2, 1, {(1, 0, 0): Fraction(1)})


def test_no_zero_coefficients_stored():
    f = x(1).to_form() - x(1).to_form()
    assert f.terms == {}
    g = Form(QQ, 2, 1, {(1, 0): Fraction(0), (0, 1): Fraction(2)})
    assert list(g.terms) == [(0, 1)]


def test_evaluate():
    f = (x(1) + x(2)) * x(3)
    assert f.evaluate([1, 2, Fraction(1, 3)]) == 1
    assert Form.constant(QQ, 3, 7).evaluate([0, 0, 0]) == 7


def test_form_json_roundtrip():
    f = (x(1) + x(2).scale(Fraction(-2, 3))) * x(3)
    again = Form.from_json(QQ, f.to_json())
    assert again == f
    lf = LinForm(GF, [1, 0, 32002])
    assert LinForm.from_json(GF, lf.to_json()) == lf


def test_str_rendering():
    f = x(1) - x(3).scale(2)
    assert str(f) == "x1 - 2*x3"
    assert str(LinForm.zero(QQ, 3)) == "0"
    assert str(x(1) * x(1) - x(2) * x(3)) == "x1^2 - x2*x3"
