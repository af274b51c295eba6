"""Exact classification of 3x3 matrices of linear forms with vanishing determinant.

The library is organized bottom-up: exact fields and constant linear algebra
(:mod:`fields`, :mod:`linalg`), homogeneous forms (:mod:`forms`), matrices of
forms (:mod:`form_matrix`), syzygies of linear forms (:mod:`syzygy`), the
constructive classifier (:mod:`classifier`), and orbit/stabilizer dimension
computations (:mod:`orbits`).  See the demos directory for worked examples.
"""

from .errors import (
    DegreeNotOne,
    InternalContradiction,
    MalformedInput,
    NotDivisible,
    NotRankOne,
    SingularFormsError,
    SingularMatrix,
    SpanTooSmall,
    WrongRank,
    WrongShape,
)
from .fields import QQ, Field, PrimeField, PrimeFieldElement, RationalField, field_from_name
from .linalg import ConstMatrix, random_invertible
from .forms import (
    Form,
    FormVector,
    LinForm,
    coefficient_span_dim,
    exact_divide,
    monomial_count,
    monomials,
)
from .form_matrix import (
    FormMatrix,
    cramer_vectors,
    outer_product,
    random_linear_matrix,
    rank1_factor,
)
from .syzygy import SyzygySpace, syzygy_space, trefl_basis
from .classifier import (
    ClassificationReport,
    ComponentTag,
    Witness,
    classify,
    matches_pattern,
    reduce_variables,
    span_bound_check,
    verify_witness,
)
from .orbits import (
    StabilizerReport,
    component_basis,
    linear_space_dim,
    orbit_dim,
    sample_component,
    stabilizer_lie_dim,
    stabilizer_report,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "Field",
    "PrimeField",
    "PrimeFieldElement",
    "RationalField",
    "field_from_name",
    "ConstMatrix",
    "random_invertible",
    "Form",
    "FormVector",
    "LinForm",
    "coefficient_span_dim",
    "exact_divide",
    "monomial_count",
    "monomials",
    "FormMatrix",
    "cramer_vectors",
    "outer_product",
    "random_linear_matrix",
    "rank1_factor",
    "SyzygySpace",
    "syzygy_space",
    "trefl_basis",
    "ClassificationReport",
    "ComponentTag",
    "Witness",
    "classify",
    "matches_pattern",
    "reduce_variables",
    "span_bound_check",
    "verify_witness",
    "StabilizerReport",
    "component_basis",
    "linear_space_dim",
    "orbit_dim",
    "sample_component",
    "stabilizer_lie_dim",
    "stabilizer_report",
    "SingularFormsError",
    "SingularMatrix",
    "NotDivisible",
    "NotRankOne",
    "WrongRank",
    "DegreeNotOne",
    "SpanTooSmall",
    "WrongShape",
    "InternalContradiction",
    "MalformedInput",
]
