"""End-to-end verification suite, also exposed as the CLI ``selftest`` command.

Each check returns (ok, detail) and is registered in CHECKS; ``run_all``
prints one pass/fail line per check.  Everything is seeded, so two runs see
exactly the same samples.
"""

from __future__ import annotations

from random import Random
from typing import Callable
from zlib import crc32

from .classifier import ComponentTag, classify, span_bound_check, verify_witness
from .fields import Field, PrimeField, QQ
from .forms import LinForm, coefficient_span_dim, monomials, random_form, random_linform
from .form_matrix import (
    FormMatrix,
    FormVector,
    outer_product,
    random_linear_matrix,
    rank1_factor,
    _proportionality_kernel,
)
from .linalg import ConstMatrix
from .orbits import orbit_dim, sample_component_rng, stabilizer_lie_dim
from .syzygy import expected_syzygy_dim, syzygy_space

GF_LARGE = PrimeField(32003)
FIELDS = (QQ, GF_LARGE)
TAGS = (ComponentTag.ZERO_ROW, ComponentTag.ZERO_COLUMN,
        ComponentTag.ZERO_SQUARE, ComponentTag.ANTISYMMETRIC)


def _seed(*parts) -> int:
    """Stable cross-process seed derived from the identifying parts."""
    return crc32(repr(parts).encode())


def check_witnesses(samples_per_combo: int = 1000) -> tuple[bool, str]:
    """Every seeded orbit sample gets a verified change-of-basis witness."""
    failures = 0
    total = 0
    for field in FIELDS:
        for tag in TAGS:
            for n in (2, 3, 4, 5):
                rng = Random(_seed(tag.value, n, field.name))
                for _ in range(samples_per_combo):
                    x = sample_component_rng(tag, n, field, rng)
                    report = classify(x)
                    total += 1
                    if report.witness is None or not verify_witness(x, report.witness):
                        failures += 1
    return failures == 0, f"{total} samples, {failures} failures"


def check_syzygy_dimensions(samples: int = 100) -> tuple[bool, str]:
    """Computed syzygy-space dimension equals (r-c)n + C(c,2) on random tuples."""
    bad = 0
    total = 0
    for field in FIELDS:
        for r in range(1, 6):
            for n in range(1, 7):
                rng = Random(1000 * r + n)
                for _ in range(samples):
                    ells = [random_linform(field, n, rng) for _ in range(r)]
                    space = syzygy_space(ells)
                    total += 1
                    if space.dim != expected_syzygy_dim(r, n, space.c):
                        bad += 1
    # The two explicit triple instances: independent -> 3, span two -> n + 1.
    x1, x2, x3 = (LinForm.variable(QQ, 3, t) for t in (1, 2, 3))
    ok_ind = syzygy_space([x1, x2, x3]).dim == 3
    y1, y2 = (LinForm.variable(QQ, 2, t) for t in (1, 2))
    ok_dep = syzygy_space([y1, y2, y1 + y2]).dim == 2 + 1
    ok = bad == 0 and ok_ind and ok_dep
    return ok, f"{total} random tuples, {bad} mismatches; explicit instances " \
               f"{'ok' if ok_ind and ok_dep else 'FAILED'}"


ORBIT_CLOSED_FORMS = {
    ComponentTag.ZERO_ROW: lambda n: 6 * n + 1,
    ComponentTag.ZERO_SQUARE: lambda n: 5 * n + 3,
    ComponentTag.ANTISYMMETRIC: lambda n: 3 * n + 7,
    # The zero-column family is the transpose of the zero-row family, so its
    # orbit dimension is the same 6n + 1 (and equals 13 at n = 2 like the rest).
    ComponentTag.ZERO_COLUMN: lambda n: 6 * n + 1,
}


def check_orbit_dimensions() -> tuple[bool, str]:
    """Orbit dimensions match their closed forms for n in 2..8; all equal 13 at n=2."""
    bad = []
    for tag in TAGS:
        for n in range(2, 9):
            got = orbit_dim(tag, n)
            want = ORBIT_CLOSED_FORMS[tag](n)
            if got != want:
                bad.append(f"{tag.value} n={n}: {got} != {want}")
    at_two = [orbit_dim(tag, 2) for tag in TAGS]
    if at_two != [13, 13, 13, 13]:
        bad.append(f"n=2 coincidence violated: {at_two}")
    return not bad, "; ".join(bad) if bad else "28 closed-form values and the n=2 coincidence"


STABILIZER_DIMS = {
    ComponentTag.ZERO_ROW: 16,
    ComponentTag.ZERO_SQUARE: 14,
    ComponentTag.ANTISYMMETRIC: 10,
    ComponentTag.ZERO_COLUMN: 16,
}


def check_stabilizer_dimensions() -> tuple[bool, str]:
    """Stabilizer Lie-algebra dimensions are 16, 14, 10, 16, over every field."""
    fields = (QQ, PrimeField(5), PrimeField(101), GF_LARGE)
    bad = []
    for tag in TAGS:
        for field in fields:
            for n in (2, 3):
                got = stabilizer_lie_dim(tag, n, field)
                if got != STABILIZER_DIMS[tag]:
                    bad.append(f"{tag.value} n={n} {field!r}: {got}")
    return not bad, "; ".join(bad) if bad else "16/14/10/16 across 4 fields and n in {2,3}"


def check_adjugate_identity(samples: int = 200) -> tuple[bool, str]:
    """X @ adj(X) = det(X) * Id entrywise on random matrices of linear forms."""
    bad = 0
    for field in FIELDS:
        rng = Random(99)
        for i in range(samples):
            n = 1 + i % 5
            x = random_linear_matrix(field, n, rng)
            det = x.determinant()
            prod = _matrix_times_form_matrix(x, x.adjugate())
            for a in range(3):
                for b in range(3):
                    want = det if a == b else None
                    got = prod[a][b]
                    if want is None:
                        if not got.is_zero():
                            bad += 1
                    elif got != want:
                        bad += 1
    return bad == 0, f"{2 * samples} matrices, {bad} bad entries"


def _matrix_times_form_matrix(x: FormMatrix, y: FormMatrix) -> list[list]:
    out = []
    for i in range(x.nrows):
        row = []
        for j in range(y.ncols):
            acc = x.entries[i][0] * y.entries[0][j]
            for k in range(1, x.ncols):
                acc = acc + x.entries[i][k] * y.entries[k][j]
            row.append(acc)
        out.append(row)
    return out


def _is_primitive(u: FormVector) -> bool:
    """No lower-degree vector is proportional to u over the fraction field."""
    single = FormMatrix(u.field, u.n, u.degree, [[f] for f in u.entries])
    return all(not _proportionality_kernel(single, d) for d in range(u.degree))


def check_rank1_factorization(samples: int = 200) -> tuple[bool, str]:
    """Constructed u @ v^t matrices factor back exactly, with primitive u."""
    bad = 0
    for field in FIELDS:
        rng = Random(4242)
        degree_pairs = [(0, 1), (1, 0), (1, 1), (2, 0), (0, 2)]
        for i in range(samples):
            n = 1 + i % 4
            du, dv = degree_pairs[i % len(degree_pairs)]
            a, b = 2 + i % 2, 2 + (i // 2) % 2
            u = _random_vector(field, n, du, a, rng)
            v = _random_vector(field, n, dv, b, rng)
            x = outer_product(u, v)
            uu, vv = rank1_factor(x)
            ok = (
                outer_product(uu, vv) == x
                and uu.degree + vv.degree == x.degree
                and _leading_is_one(uu)
                and _is_primitive(uu)
            )
            if not ok:
                bad += 1
    return bad == 0, f"{2 * samples} factorizations, {bad} failures"


def _random_vector(field: Field, n: int, degree: int, size: int, rng: Random) -> FormVector:
    while True:
        entries = [random_form(field, n, degree, rng) for _ in range(size)]
        vec = FormVector(field, n, degree, entries)
        if not vec.is_zero():
            return vec


def _leading_is_one(u: FormVector) -> bool:
    for m in monomials(u.n, u.degree):
        for f in u.entries:
            c = f.terms.get(m)
            if c:
                return c == u.field.one
    return False


def check_span_bound(samples: int = 10000) -> tuple[bool, str]:
    """Entry span of dimension >= 7 forces a nonzero determinant."""
    rng = Random(271828)
    checked = 0
    bad = 0
    while checked < samples:
        x = random_linear_matrix(GF_LARGE, 9, rng)
        if coefficient_span_dim(x.all_linforms()) < 7:
            continue
        checked += 1
        if not span_bound_check(x):
            bad += 1
    rng = Random(314159)
    checked_q = 0
    while checked_q < 200:
        x = random_linear_matrix(QQ, 9, rng)
        if coefficient_span_dim(x.all_linforms()) < 7:
            continue
        checked_q += 1
        if not span_bound_check(x):
            bad += 1
    return bad == 0, f"{checked} GF + {checked_q} Q wide-span matrices, {bad} vanishing determinants"


def check_membership_equivalence(samples_per_combo: int = 250) -> tuple[bool, str]:
    """rank(coefficient matrix) <= 2 agrees with a constant (co)kernel existing."""
    bad = 0
    total = 0
    for field in FIELDS:
        for tag in TAGS:
            for n in (2, 3, 4, 5):
                rng = Random(_seed("membership", tag.value, n, field.name))
                for _ in range(samples_per_combo):
                    x = sample_component_rng(tag, n, field, rng)
                    total += 1
                    if not _membership_agrees(x):
                        bad += 1
        rng = Random(55)
        for _ in range(500):
            x = random_linear_matrix(field, 3, rng)
            total += 1
            if not _membership_agrees(x):
                bad += 1
    return bad == 0, f"{total} matrices, {bad} disagreements"


def _membership_agrees(x: FormMatrix) -> bool:
    row_rank_small = x.coefficient_matrix("rows").rank() <= 2
    col_rank_small = x.coefficient_matrix("cols").rank() <= 2
    has_cokernel = bool(x.transpose().kernel_at_degree(0))
    has_kernel = bool(x.kernel_at_degree(0))
    return row_rank_small == has_cokernel and col_rank_small == has_kernel


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("witness soundness and completeness", check_witnesses),
    ("syzygy dimension formula", check_syzygy_dimensions),
    ("orbit dimensions", check_orbit_dimensions),
    ("stabilizer dimensions", check_stabilizer_dimensions),
    ("adjugate identity", check_adjugate_identity),
    ("rank-1 factorization", check_rank1_factorization),
    ("span bound", check_span_bound),
    ("row/column membership equivalence", check_membership_equivalence),
]


def run_all(out=print) -> bool:
    """Run every check, print one line per check, and return overall success."""
    all_ok = True
    for name, fn in CHECKS:
        ok, detail = fn()
        all_ok = all_ok and ok
        out(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    out(f"{'all checks passed' if all_ok else 'SOME CHECKS FAILED'}")
    return all_ok
