"""Command-line interface.

Subcommands: classify, generate, syzygy, orbit-dims, selftest.  Matrices and
forms travel as JSON (see the class-level to_json/from_json formats); the
table output mode renders forms as signed monomial sums like ``x1 - 2*x3``.
Exit codes: 0 success, 1 domain error, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import acceptance
from .classifier import ClassificationReport, ComponentTag, classify
from .errors import MalformedInput, SingularFormsError
from .fields import Field, field_from_name
from .forms import LinForm
from .form_matrix import FormMatrix
from .orbits import sample_component, stabilizer_report
from .syzygy import SyzygySpace, syzygy_space

SEED_ENV = "SINGULAR_FORMS_SEED"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e}") from e


def _parse_matrices(text: str, field: Field) -> list[FormMatrix]:
    """A single matrix object, an array of them, or one object per line."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as first_error:
        matrices = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as e:
                raise MalformedInput(
                    f"line {lineno} column {e.colno}: {e.msg}"
                ) from e
            matrices.append(_matrix_from_obj(data, field, lineno))
        if not matrices:
            raise MalformedInput(
                f"line {first_error.lineno} column {first_error.colno}: {first_error.msg}"
            ) from first_error
        return matrices
    if isinstance(data, list):
        return [_matrix_from_obj(obj, field, i + 1) for i, obj in enumerate(data)]
    return [_matrix_from_obj(data, field, 1)]


def _matrix_from_obj(data, field: Field, position: int) -> FormMatrix:
    if not isinstance(data, dict):
        raise MalformedInput(f"matrix {position}: expected a JSON object")
    try:
        return FormMatrix.from_json(field, data)
    except (KeyError, ValueError, TypeError) as e:
        raise MalformedInput(f"matrix {position}: {e}") from e


def _matrix_table(m: FormMatrix) -> str:
    cells = [[str(f) for f in row] for row in m.entries]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(
        "[ " + "   ".join(c.rjust(width) for c in row) + " ]" for row in cells
    )


def _const_table(m) -> str:
    cells = m.to_lists()
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(
        "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells
    )


def _print_report(report: ClassificationReport, output: str) -> None:
    if output == "json":
        print(json.dumps(report.to_json()))
        return
    print(f"singular:    {'yes' if report.is_singular else 'no'}")
    print(f"in_R:        {'yes' if report.in_R else 'no'}")
    print(f"in_C:        {'yes' if report.in_C else 'no'}")
    print(f"effective_n: {report.effective_n}")
    if report.witness is None:
        print("witness:     none")
        return
    w = report.witness
    print(f"tag:         {w.tag.value}")
    print("F:")
    print(_const_table(w.f))
    print("G:")
    print(_const_table(w.g))
    print("normal form (F @ X @ G):")
    print(_matrix_table(w.normal_form))


def cmd_classify(args) -> int:
    field = field_from_name(args.field)
    matrices = _parse_matrices(_read_input(args.input), field)
    for i, m in enumerate(matrices):
        if len(matrices) > 1 and args.output == "table":
            print(f"--- matrix {i + 1} ---")
        _print_report(classify(m), args.output)
    return 0


def cmd_generate(args) -> int:
    field = field_from_name(args.field)
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        if env is None:
            raise SingularFormsError(
                f"generate needs --seed (or the {SEED_ENV} environment variable)"
            )
        seed = int(env)
    tag = ComponentTag.parse(args.tag)
    m = sample_component(tag, args.n, field, seed)
    if args.output == "json":
        print(json.dumps(m.to_json()))
    else:
        print(_matrix_table(m))
    return 0


def _parse_forms(text: str, field: Field) -> list[LinForm]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"line {e.lineno} column {e.colno}: {e.msg}") from e
    if isinstance(data, dict):
        data = data.get("forms")
    if not isinstance(data, list) or not data:
        raise MalformedInput("expected a nonempty JSON array of coefficient lists")
    forms = []
    for i, coeffs in enumerate(data):
        if not isinstance(coeffs, list):
            raise MalformedInput(f"form {i + 1}: expected a coefficient list")
        try:
            forms.append(LinForm.from_json(field, coeffs))
        except (ValueError, TypeError) as e:
            raise MalformedInput(f"form {i + 1}: {e}") from e
    if len({f.n for f in forms}) != 1:
        raise MalformedInput("all forms must have the same number of coefficients")
    return forms


def _print_syzygy(space: SyzygySpace, output: str) -> None:
    if output == "json":
        print(json.dumps(space.to_json()))
        return
    print(f"r={space.r}  n={space.n}  c={space.c}  dim={space.dim}")
    for tup in space.basis:
        print("  (" + ", ".join(str(f) for f in tup) + ")")


def cmd_syzygy(args) -> int:
    field = field_from_name(args.field)
    forms = _parse_forms(_read_input(args.input), field)
    _print_syzygy(syzygy_space(forms), args.output)
    return 0


def cmd_orbit_dims(args) -> int:
    field = field_from_name(args.field)
    reports = [stabilizer_report(tag, args.n, field) for tag in ComponentTag]
    if args.output == "json":
        print(json.dumps([r.to_json() for r in reports]))
        return 0
    print(f"{'component':15s} {'space dim':>9s} {'stab dim':>8s} {'orbit dim':>9s}")
    for r in reports:
        print(f"{r.tag.value:15s} {r.linear_space_dim:9d} {r.stab_lie_dim:8d} {r.orbit_dim:9d}")
    return 0


def cmd_selftest(args) -> int:
    return 0 if acceptance.run_all() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singular-forms",
        description="Exact classification of 3x3 matrices of linear forms "
                    "with identically vanishing determinant.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output=True):
        p.add_argument("--field", default="q", metavar="{q|gfP}",
                       help="base field: q for the rationals, gfP for GF(P), e.g. gf32003")
        if output:
            p.add_argument("--output", choices=("json", "table"), default="json")

    p = sub.add_parser("classify", help="classify matrices of linear forms")
    p.add_argument("input", help="path to matrix JSON, '-' for stdin; "
                                 "multiple matrices as a JSON array or one per line")
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="sample a matrix from one orbit family")
    p.add_argument("--tag", required=True,
                   help="zero-row | zero-column | zero-square | antisymmetric")
    p.add_argument("--n", type=int, default=3, help="number of variables")
    p.add_argument("--seed", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("syzygy", help="syzygy space of a tuple of linear forms")
    p.add_argument("input", help="JSON array of coefficient lists, or '-' for stdin")
    add_common(p)
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("orbit-dims", help="stabilizer and orbit dimensions of the four families")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_orbit_dims)

    p = sub.add_parser("selftest", help="run the full verification suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedInput as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (SingularFormsError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
