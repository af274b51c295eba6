"""Homogeneous multivariate forms over an exact field.

``LinForm`` is a dense degree-1 form (a coefficient vector), ``Form`` is a
sparse homogeneous form of any fixed degree keyed by exponent tuples, and
``FormVector`` is a column vector of forms sharing one degree.  Monomials are
enumerated in a fixed order (x1-first, exponent tuples descending
lexicographically) so that every computation is deterministic.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from random import Random
from typing import Iterable, Sequence

from .errors import NotDivisible
from .fields import Field, Scalar
from .linalg import ConstMatrix


def monomial_count(n: int, d: int) -> int:
    """Number of monomials of degree d in n variables, C(n + d - 1, d)."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return comb(n + d - 1, d)


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of degree d in n variables, x1-first.

    Sorted descending lexicographically, so for n = 3, d = 1 the order is
    x1, x2, x3 and for d = 2 it starts x1^2, x1*x2, x1*x3, x2^2, ...
    """
    if n == 0:
        return ((),) if d == 0 else ()

    def gen(k: int, rem: int):
        if k == 1:
            yield (rem,)
            return
        for e in range(rem, -1, -1):
            for tail in gen(k - 1, rem - e):
                yield (e,) + tail

    return tuple(gen(n, d))


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomials(n, d))}


class LinForm:
    """A linear form sum(c_t * x_t), stored as a dense coefficient vector."""

    __slots__ = ("n", "field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable):
        self.field = field
        self.coeffs = tuple(field.coerce(c) for c in coeffs)
        self.n = len(self.coeffs)

    @classmethod
    def variable(cls, field: Field, n: int, t: int) -> "LinForm":
        """The form x_t (1-based index t)."""
        return cls(field, [1 if i == t - 1 else 0 for i in range(n)])

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinForm":
        return cls(field, [0] * n)

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "LinForm") -> "LinForm":
        return LinForm(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "LinForm":
        return LinForm(self.field, [-a for a in self.coeffs])

    def scale(self, c) -> "LinForm":
        c = self.field.coerce(c)
        return LinForm(self.field, [c * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, LinForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def to_form(self) -> "Form":
        terms = {}
        for t, c in enumerate(self.coeffs):
            if c:
                e = tuple(1 if i == t else 0 for i in range(self.n))
                terms[e] = c
        return Form(self.field, self.n, 1, terms)

    def __mul__(self, other: "Form | LinForm") -> "Form":
        if isinstance(other, LinForm):
            other = other.to_form()
        return self.to_form() * other

    def to_json(self) -> list[str]:
        return [self.field.to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field: Field, data: Sequence) -> "LinForm":
        return cls(field, [field.parse(c) for c in data])

    def __str__(self):
        return format_terms(
            [(e, c) for e, c in zip(monomials(self.n, 1), self.coeffs) if c], self.field
        ) if not self.is_zero() else "0"

    def __repr__(self):
        return f"LinForm({self})"


class Form:
    """Sparse homogeneous form of fixed degree; zero coefficients are never stored."""

    __slots__ = ("n", "field", "degree", "terms")

    def __init__(self, field: Field, n: int, degree: int, terms: dict):
        self.field = field
        self.n = n
        self.degree = degree
        clean = {}
        for e, c in terms.items():
            if c:
                if len(e) != n or sum(e) != degree:
                    raise ValueError(f"exponent {e} does not fit degree {degree} in {n} variables")
                clean[e] = c
        self.terms = clean

    @classmethod
    def zero(cls, field: Field, n: int, degree: int) -> "Form":
        return cls(field, n, degree, {})

    @classmethod
    def constant(cls, field: Field, n: int, value) -> "Form":
        value = field.coerce(value)
        return cls(field, n, 0, {(0,) * n: value} if value else {})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e: tuple[int, ...]) -> Scalar:
        return self.terms.get(e, self.field.zero)

    def coefficient_vector(self) -> list[Scalar]:
        """Dense coefficients against monomials(n, degree), in monomial order."""
        return [self.terms.get(e, self.field.zero) for e in monomials(self.n, self.degree)]

    def __add__(self, other: "Form") -> "Form":
        if other.degree != self.degree and self.terms and other.terms:
            raise ValueError("cannot add forms of different degrees")
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = acc.get(e)
            if s is None:
                acc[e] = c
            else:
                s = s + c
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return Form(self.field, self.n, max(self.degree, other.degree), acc)

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __neg__(self) -> "Form":
        return Form(self.field, self.n, self.degree, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> "Form":
        c = self.field.coerce(c)
        if not c:
            return Form.zero(self.field, self.n, self.degree)
        return Form(self.field, self.n, self.degree, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "Form") -> "Form":
        if isinstance(other, LinForm):
            other = other.to_form()
        if other.n != self.n:
            raise ValueError("cannot multiply forms in different variable counts")
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = acc.get(e)
                if s is None:
                    acc[e] = c
                else:
                    s = s + c
                    if s:
                        acc[e] = s
                    else:
                        del acc[e]
        return Form(self.field, self.n, self.degree + other.degree, acc)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.n, tuple(sorted(self.terms.items()))))

    def evaluate(self, point: Sequence) -> Scalar:
        """Value of the form at a point given as one scalar per variable."""
        if len(point) != self.n:
            raise ValueError(f"point needs {self.n} coordinates")
        values = [self.field.coerce(v) for v in point]
        total = self.field.zero
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                for _ in range(k):
                    term = term * v
            total = total + term
        return total

    def as_linform(self) -> LinForm:
        if self.degree != 1:
            raise ValueError("only degree-1 forms convert to LinForm")
        coeffs = [self.field.zero] * self.n
        for e, c in self.terms.items():
            coeffs[e.index(1)] = c
        return LinForm(self.field, coeffs)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [
                {"exp": list(e), "coeff": self.field.to_str(c)}
                for e, c in sorted(self.terms.items(), reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, field: Field, data: dict) -> "Form":
        terms = {tuple(t["exp"]): field.parse(t["coeff"]) for t in data["terms"]}
        return cls(field, int(data["n"]), int(data["degree"]), terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return format_terms(sorted(self.terms.items(), reverse=True), self.field)

    def __repr__(self):
        return f"Form({self})"


def format_terms(items, field) -> str:
    """Render (exponent, coefficient) pairs as a signed monomial sum like ``x1 - 2*x3``."""
    parts = []
    for e, c in items:
        mono = "*".join(
            f"x{t + 1}" if k == 1 else f"x{t + 1}^{k}" for t, k in enumerate(e) if k
        )
        cs = field.to_str(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


class FormVector:
    """Column vector of homogeneous forms sharing one degree."""

    __slots__ = ("n", "field", "degree", "entries")

    def __init__(self, field: Field, n: int, degree: int, entries: Iterable[Form]):
        self.field = field
        self.n = n
        self.degree = degree
        self.entries = tuple(entries)
        for f in self.entries:
            if f.n != n or (f.terms and f.degree != degree):
                raise ValueError("vector entries must share variables and degree")

    @classmethod
    def from_linforms(cls, forms: Sequence[LinForm]) -> "FormVector":
        return cls(forms[0].field, forms[0].n, 1, [f.to_form() for f in forms])

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i: int) -> Form:
        return self.entries[i]

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.entries)

    def scale(self, c) -> "FormVector":
        return FormVector(self.field, self.n, self.degree, [f.scale(c) for f in self.entries])

    def __eq__(self, other):
        if not isinstance(other, FormVector):
            return NotImplemented
        return self.entries == other.entries

    def linforms(self) -> list[LinForm]:
        if self.degree != 1:
            raise ValueError("entries are not linear")
        return [f.as_linform() for f in self.entries]

    def __repr__(self):
        return "FormVector(" + ", ".join(str(f) for f in self.entries) + ")"


def exact_divide(a: Form, b: Form) -> Form:
    """The homogeneous quotient q with b * q = a, when one exists.

    Found by solving the linear system in the unknown coefficients of q;
    raises NotDivisible when the system is inconsistent (or the degrees
    already rule a quotient out).
    """
    if b.is_zero():
        raise ZeroDivisionError("division of a form by zero")
    if a.degree < b.degree:
        raise NotDivisible(f"degree {a.degree} form is not divisible by degree {b.degree}")
    dq = a.degree - b.degree
    if a.is_zero():
        return Form.zero(a.field, a.n, dq)
    field = a.field
    unknowns = monomials(a.n, dq)
    eq_index = monomial_index(a.n, a.degree)
    rows = [[field.zero] * len(unknowns) for _ in range(len(eq_index))]
    for j, eq in enumerate(unknowns):
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(eq, eb))
            rows[eq_index[e]][j] = rows[eq_index[e]][j] + cb
    rhs = [[a.terms.get(e, field.zero)] for e in monomials(a.n, a.degree)]
    sol = ConstMatrix(field, rows).solve_right(ConstMatrix(field, rhs))
    if sol is None:
        raise NotDivisible(f"{a} is not divisible by {b}")
    terms = {e: v for e, v in zip(unknowns, sol.column_values()) if v}
    return Form(field, a.n, dq, terms)


def coefficient_span_dim(forms: Sequence[LinForm]) -> int:
    """Dimension of the k-span of the given linear forms."""
    if not forms:
        return 0
    field = forms[0].field
    return ConstMatrix(field, [f.coeffs for f in forms]).rank()


def random_linform(field: Field, n: int, rng: Random) -> LinForm:
    return LinForm(field, [field.random(rng) for _ in range(n)])


def random_form(field: Field, n: int, degree: int, rng: Random) -> Form:
    terms = {}
    for e in monomials(n, degree):
        c = field.random(rng)
        if c:
            terms[e] = c
    return Form(field, n, degree, terms)
