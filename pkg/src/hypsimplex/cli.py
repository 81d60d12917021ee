"""Command line interface.

Subcommands: classify, solve, table, grid, check.  Output goes to stdout as
JSON lines (default) or CSV; every float is printed with 17 significant
digits and fields keep a fixed order, so the output is diffable.
Diagnostics go to stderr.  Exit codes: 0 solved / all checks pass, 1 no
proper or boundary solution, 2 invalid parameters, 3 diverged, 4 check
failure.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from math import pi

import click
import numpy as np

from . import solver as solver_lib
from .conditions import (
    compute_bmax,
    corner_value,
    edge_condition1_deriv_raw,
    edge_condition1_raw,
    edge_condition2_deriv_raw,
    edge_condition2_raw,
    realizability_inequality,
)
from .errors import (
    AmbiguousSignature,
    DomainError,
    InvalidClass,
    InvalidParams,
    SingularMatrix,
)
from .matrices import (
    Geometry,
    MinorSpec,
    SymMatrix4,
    determinant,
    inverse,
    jacobi_minor_identity,
    projective_distance,
    signature,
)
from .model import (
    DihedralAngles,
    RealizationClass,
    SimplexParams,
    build_coxeter_schlafli,
    classify_realization,
    classify_vertex,
    normalize_params,
)
from .solver import SolverConfig, SolverMethod, SolveStatus

EXIT_SOLVED = 0
EXIT_NO_SOLUTION = 1
EXIT_INVALID_PARAMS = 2
EXIT_DIVERGED = 3
EXIT_CHECK_FAILURE = 4

_STATUS_EXIT = {
    SolveStatus.SOLVED: EXIT_SOLVED,
    SolveStatus.NO_PROPER_SOLUTION: EXIT_NO_SOLUTION,
    SolveStatus.BOUNDARY_SOLUTION: EXIT_NO_SOLUTION,
    SolveStatus.DIVERGED: EXIT_DIVERGED,
}

_SOLVABLE = (RealizationClass.HYPERBOLIC_OUTER, RealizationClass.NO_PROPER_SOLUTION)

_METHOD_BY_TOKEN = {
    "fixed": SolverMethod.FIXED_POINT,
    "newton": SolverMethod.NEWTON,
    "oracle": SolverMethod.GRID_ORACLE,
    "auto": SolverMethod.AUTO,
}

# The two vertex pairs whose mutual distances the geometry must equate; each
# inner pair lists the two edges whose lengths are compared.
_VERIFIED_EDGE_PAIRS = (((0, 1), (0, 2)), ((0, 3), (1, 3)))


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _json_token(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_json_token(v) for v in value) + "]"
    raise TypeError(f"unserializable value {value!r}")


def _csv_item(item) -> str:
    if isinstance(item, (list, tuple)):
        return ":".join(_csv_item(x) for x in item)
    if isinstance(item, str):
        return item
    if isinstance(item, bool):
        return "true" if item else "false"
    if isinstance(item, int):
        return str(item)
    return _fmt(item)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, (list, tuple)):
        return ";".join(_csv_item(item) for item in value)
    return str(value)


def _emit(rows, fmt: str) -> None:
    """Write rows (lists of (key, value) pairs) in the requested format."""
    rows = list(rows)
    if not rows:
        return
    if fmt == "json-lines":
        for row in rows:
            line = "{" + ",".join(f"{json.dumps(k)}:{_json_token(v)}" for k, v in row) + "}"
            click.echo(line)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([k for k, _ in rows[0]])
        for row in rows:
            writer.writerow([_csv_cell(v) for _, v in row])
        click.echo(buffer.getvalue(), nl=False)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _angles_out(value: float | None, degrees: bool) -> float | None:
    if value is None:
        return None
    return value * 180.0 / pi if degrees else value


def _parse_range(text: str, label: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        _fail(f"cannot parse {label} range {text!r}; expected N or LO..HI", EXIT_INVALID_PARAMS)
    if lo > hi:
        _fail(f"empty {label} range {text!r}", EXIT_INVALID_PARAMS)
    return lo, hi


def _solver_options(func):
    options = [
        click.option("--tol", type=float, default=1e-11, show_default=True,
                     help="Residual tolerance on both edge conditions."),
        click.option("--angle-tol", type=float, default=1e-12, show_default=True,
                     help="Displacement tolerance for the angle iterates."),
        click.option("--max-iter", type=int, default=2000, show_default=True,
                     help="Iteration budget for the fixed-point stage."),
        click.option("--k1", type=float, default=None,
                     help="Damping constant for the first condition (default: automatic)."),
        click.option("--k2", type=float, default=None,
                     help="Damping constant for the second condition (default: automatic)."),
        click.option("--method", type=click.Choice(sorted(_METHOD_BY_TOKEN)),
                     default="auto", show_default=True,
                     help="Root-finding strategy."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _format_option(func):
    return click.option(
        "--format", "fmt", type=click.Choice(["json-lines", "csv"]),
        default="json-lines", show_default=True, help="Output format.",
    )(func)


def _degrees_option(func):
    return click.option(
        "--degrees", is_flag=True, help="Print angles in degrees instead of radians.",
    )(func)


def _make_config(tol, angle_tol, max_iter, k1, k2, method) -> SolverConfig:
    return SolverConfig(
        tolerance=tol,
        angle_tolerance=angle_tol,
        max_iterations=max_iter,
        k1=k1,
        k2=k2,
        method=_METHOD_BY_TOKEN[method],
    )


def _b_max_field(a: int) -> object:
    """Largest admissible second parameter, or a sentinel when a scan ceiling
    is reached without the bound ever failing."""
    if a < 2:
        return None
    limit = compute_bmax(a)
    return "Unbounded" if limit is None else limit


def _geometry_fields(angles: DihedralAngles | None) -> list:
    """Metric data at the given angles: determinant, inertia, vertex types,
    and the two verified edge-length pairs.  Fields degrade to null for
    degenerate configurations (singular matrix, unclassifiable vertex)."""
    det = sig = classes = lengths = None
    if angles is not None:
        matrix = build_coxeter_schlafli(angles)
        det = determinant(matrix)
        sig = list(signature(matrix).as_tuple())
        try:
            classes = [classify_vertex(matrix, i).value for i in range(4)]
        except AmbiguousSignature:
            classes = None
        try:
            gram = inverse(matrix)
            lengths = [
                [projective_distance(gram, i, j, Geometry.HYPERBOLIC) for i, j in pair]
                for pair in _VERIFIED_EDGE_PAIRS
            ]
        except (SingularMatrix, DomainError):
            lengths = None
    return [
        ("determinant", det),
        ("signature", sig),
        ("vertex_classes", classes),
        ("edge_lengths", lengths),
    ]


def _normalized(a: int, b: int) -> SimplexParams:
    try:
        return normalize_params(a, b)
    except InvalidParams as exc:
        _fail(str(exc), EXIT_INVALID_PARAMS)


@click.group()
def cli() -> None:
    """Realizability and angle solving for a family of hyperbolic simplices."""


@cli.command(name="classify")
@click.argument("a", type=int)
@click.argument("b", type=int)
@_format_option
def cmd_classify(a: int, b: int, fmt: str) -> None:
    """Classify the parameter pair (A, B)."""
    params = _normalized(a, b)
    cls = classify_realization(params)
    lhs = rhs = strict = corner = None
    if params.a >= 2 and params.b > params.a:
        lhs, rhs, strict = realizability_inequality(params)
        corner = corner_value(params)
    _emit(
        [[
            ("a", params.a),
            ("b", params.b),
            ("swapped", params.swapped),
            ("class", cls.value),
            ("inequality_lhs", lhs),
            ("inequality_rhs", rhs),
            ("strict", strict),
            ("corner_value", corner),
            ("b_max", _b_max_field(params.a)),
        ]],
        fmt,
    )


def _solve_row(params: SimplexParams, report, degrees: bool) -> list:
    angles = report.angles
    properness = report.properness
    return [
        ("a", params.a),
        ("b", params.b),
        ("swapped", params.swapped),
        ("class", classify_realization(params).value),
        ("status", report.status.value),
        ("alpha1", _angles_out(angles.alpha1 if angles else None, degrees)),
        ("alpha2", _angles_out(angles.alpha2 if angles else None, degrees)),
        ("beta1", _angles_out(angles.beta1 if angles else None, degrees)),
        ("beta2", _angles_out(angles.beta2 if angles else None, degrees)),
        ("residual_cond1", report.residual_cond1),
        ("residual_cond2", report.residual_cond2),
        ("iterations", report.iterations),
        *_geometry_fields(angles),
        ("b_max", _b_max_field(params.a)),
        ("contraction_norm_estimate", report.contraction_norm_estimate),
        ("proper_angles_positive", properness.angles_positive if properness else None),
        ("proper_determinant_negative", properness.determinant_negative if properness else None),
        ("proper_vertices_outer", properness.vertices_outer if properness else None),
        ("proper_gram_signs", properness.gram_signs if properness else None),
        ("proper_all_pass", properness.all_pass if properness else None),
        ("improper_roots", [
            [_angles_out(x, degrees), _angles_out(y, degrees)]
            for x, y in report.improper_roots
        ]),
    ]


@cli.command(name="solve")
@click.argument("a", type=int)
@click.argument("b", type=int)
@_solver_options
@_format_option
@_degrees_option
def cmd_solve(a, b, tol, angle_tol, max_iter, k1, k2, method, fmt, degrees) -> None:
    """Solve the edge-condition system for the pair (A, B)."""
    params = _normalized(a, b)
    config = _make_config(tol, angle_tol, max_iter, k1, k2, method)
    try:
        report = solver_lib.solve(params, config)
    except (InvalidClass, InvalidParams) as exc:
        _fail(str(exc), EXIT_INVALID_PARAMS)
    _emit([_solve_row(params, report, degrees)], fmt)
    sys.exit(_STATUS_EXIT[report.status])


def _table_row(a: int, b: int, cls: RealizationClass, report, degrees: bool) -> list:
    angles = report.angles if report is not None else None
    return [
        ("a", a),
        ("b", b),
        ("class", cls.value),
        ("status", report.status.value if report is not None else None),
        ("alpha1", _angles_out(angles.alpha1 if angles else None, degrees)),
        ("alpha2", _angles_out(angles.alpha2 if angles else None, degrees)),
        ("beta1", _angles_out(angles.beta1 if angles else None, degrees)),
        ("beta2", _angles_out(angles.beta2 if angles else None, degrees)),
        ("residual_cond1", report.residual_cond1 if report is not None else None),
        ("residual_cond2", report.residual_cond2 if report is not None else None),
        ("iterations", report.iterations if report is not None else None),
        *_geometry_fields(angles),
        ("b_max", _b_max_field(a)),
    ]


@cli.command(name="table")
@click.option("--a", "a_range", default="2..6", show_default=True,
              help="First parameter, as N or LO..HI.")
@click.option("--b", "b_range", default=None,
              help="Second parameter, as N or LO..HI.")
@click.option("--b-upto", "b_upto", default=None,
              help='Largest second parameter per a: an integer, or "bmax" '
                   "for the admissibility bound (the default).")
@_solver_options
@_format_option
@_degrees_option
def cmd_table(a_range, b_range, b_upto, tol, angle_tol, max_iter, k1, k2,
              method, fmt, degrees) -> None:
    """Tabulate solved angles over a parameter range."""
    a_lo, a_hi = _parse_range(a_range, "a")
    if a_lo < 1:
        _fail(f"a must be at least 1, got {a_lo}", EXIT_INVALID_PARAMS)
    if b_range is not None and b_upto is not None:
        _fail("--b and --b-upto are mutually exclusive", EXIT_INVALID_PARAMS)
    b_ceiling = None
    if b_upto is not None and b_upto != "bmax":
        try:
            b_ceiling = int(b_upto)
        except ValueError:
            _fail(f'cannot parse --b-upto value {b_upto!r}; expected an '
                  'integer or "bmax"', EXIT_INVALID_PARAMS)
    config = _make_config(tol, angle_tol, max_iter, k1, k2, method)
    rows = []
    diverged = False
    for a in range(a_lo, a_hi + 1):
        if b_range is not None:
            b_lo, b_hi = _parse_range(b_range, "b")
        elif b_ceiling is not None:
            b_lo, b_hi = a + 1, b_ceiling
        else:
            if a < 2:
                continue
            limit = compute_bmax(a)
            b_lo, b_hi = a + 1, limit if limit is not None else 4 * a
        for b in range(b_lo, b_hi + 1):
            if b <= a:
                continue
            params = SimplexParams(a, b)
            cls = classify_realization(params)
            if cls not in _SOLVABLE:
                rows.append(_table_row(a, b, cls, None, degrees))
                continue
            report = solver_lib.solve(params, config)
            if report.status is SolveStatus.DIVERGED:
                diverged = True
            rows.append(_table_row(a, b, cls, report, degrees))
    if not rows:
        _fail("empty parameter range: no pairs with b > a", EXIT_INVALID_PARAMS)
    _emit(rows, fmt)
    sys.exit(EXIT_DIVERGED if diverged else EXIT_SOLVED)


@cli.command(name="grid")
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.option("--resolution", type=int, default=200, show_default=True,
              help="Sample nodes per axis (>= 2; the endpoints are included).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json-lines"]),
              default="csv", show_default=True, help="Output format.")
@_degrees_option
def cmd_grid(a: int, b: int, resolution: int, fmt: str, degrees: bool) -> None:
    """Sample the edge conditions and their derivatives over the domain box."""
    params = _normalized(a, b)
    if resolution < 2:
        _fail(f"resolution must be at least 2 nodes per axis, got {resolution}",
              EXIT_INVALID_PARAMS)
    cls = classify_realization(params)
    if cls not in _SOLVABLE:
        _fail(
            f"grid applies to hyperbolic pairs with outer vertices; "
            f"({params.a}, {params.b}) classifies as {cls.value}",
            EXIT_INVALID_PARAMS,
        )
    box = solver_lib.domain_for(params)
    al = np.linspace(box.alpha1_lo, box.alpha1_hi, resolution)
    be = np.linspace(box.beta1_lo, box.beta1_hi, resolution)
    aa, bb = np.meshgrid(al, be, indexing="ij")
    c1 = edge_condition1_raw(aa, bb, params.a, params.b)
    c2 = edge_condition2_raw(aa, bb, params.a, params.b)
    d1 = edge_condition1_deriv_raw(aa, bb, params.a, params.b)
    d2 = edge_condition2_deriv_raw(aa, bb, params.a, params.b)
    scale = 180.0 / pi if degrees else 1.0
    rows = (
        [
            ("alpha1", float(aa[i, j]) * scale),
            ("beta1", float(bb[i, j]) * scale),
            ("cond1", float(c1[i, j])),
            ("cond2", float(c2[i, j])),
            ("dcond1", float(d1[i, j])),
            ("dcond2", float(d2[i, j])),
        ]
        for i in range(resolution)
        for j in range(resolution)
    )
    _emit(rows, fmt)


def run_minor_identity_suite(
    trials: int,
    seed: int,
    identity_only: bool = False,
    relative_tol: float = 1e-9,
    singular_tol: float = 1e-8,
) -> dict:
    """Sweep the minor/cofactor identity over seeded random matrices.

    Each trial draws a random symmetric 4x4 matrix and random row/column
    index sets for a minor, evaluates both sides of the identity
    independently, and compares them at ``relative_tol``.  Draws whose determinant magnitude
    falls below ``singular_tol`` violate the regularity precondition and are
    skipped (recorded in ``notes``), not failed.  With ``identity_only`` the
    identity matrix replaces the random draw, which makes every trial exact.
    """
    rng = np.random.default_rng(seed)
    passes = failures = skipped = 0
    worst_gap = 0.0
    notes: list[str] = []
    for index in range(trials):
        if identity_only:
            matrix = SymMatrix4(np.eye(4))
        else:
            raw = rng.uniform(-2.0, 2.0, size=(4, 4))
            matrix = SymMatrix4((raw + raw.T) / 2.0)
        size = int(rng.integers(1, 4))
        rows = tuple(sorted(int(v) for v in rng.choice(4, size=size, replace=False)))
        cols = tuple(sorted(int(v) for v in rng.choice(4, size=size, replace=False)))
        det = determinant(matrix)
        if abs(det) < singular_tol:
            skipped += 1
            notes.append(
                f"SingularMatrix: trial {index} skipped (determinant {det:.3e})"
            )
            continue
        try:
            lhs, rhs = jacobi_minor_identity(matrix, MinorSpec(rows, cols))
        except SingularMatrix as exc:
            skipped += 1
            notes.append(f"SingularMatrix: trial {index} skipped ({exc})")
            continue
        gap = abs(lhs - rhs) / max(1.0, abs(lhs))
        worst_gap = max(worst_gap, gap)
        if gap <= relative_tol:
            passes += 1
        else:
            failures += 1
    return {
        "trials": trials,
        "seed": seed,
        "identity_only": identity_only,
        "passes": passes,
        "failures": failures,
        "skipped": skipped,
        "worst_relative_gap": worst_gap,
        "notes": notes,
    }


@cli.command(name="check")
@click.option("--trials", type=int, default=1000, show_default=True,
              help="Number of random matrix/minor trials.")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Seed for the random matrix and minor draws.")
@click.option("--identity-only", is_flag=True,
              help="Use the identity matrix instead of random draws.")
@_format_option
def cmd_check(trials: int, seed: int, identity_only: bool, fmt: str) -> None:
    """Run the randomized minor-identity verification suite."""
    if trials < 1:
        _fail(f"trials must be at least 1, got {trials}", EXIT_INVALID_PARAMS)
    summary = run_minor_identity_suite(trials, seed, identity_only)
    for note in summary["notes"]:
        click.echo(note, err=True)
    _emit(
        [[(key, summary[key]) for key in (
            "trials", "seed", "identity_only", "passes", "failures",
            "skipped", "worst_relative_gap",
        )]],
        fmt,
    )
    sys.exit(EXIT_SOLVED if summary["failures"] == 0 else EXIT_CHECK_FAILURE)


def main() -> None:
    cli(prog_name="hypsimplex")


if __name__ == "__main__":
    main()
