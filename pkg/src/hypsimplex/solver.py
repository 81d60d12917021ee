"""Root finding for the edge-condition system.

The solve pipeline is: gate on the realization class, decide solvability
from the sign of the corner value, then locate the root of the two edge
conditions inside the reduced domain box by a damped fixed-point iteration
polished with Newton steps, and finally verify the solved angles
geometrically (positivity, determinant sign, vertex classes, inverse-matrix
sign pattern).  A grid-based oracle provides an independent root locator
used both as a fallback and for cross-checking, and a sampled contraction
estimate certifies the fixed-point map on a box around the root.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import hypot, pi

import numpy as np

from . import matrices
from .conditions import (
    edge_condition1_cross_deriv_raw,
    edge_condition1_deriv_raw,
    edge_condition1_raw,
    edge_condition2_cross_deriv_raw,
    edge_condition2_deriv_raw,
    edge_condition2_raw,
    corner_value,
)
from .errors import AmbiguousSignature, InvalidClass, NoContraction
from .model import (
    DihedralAngles,
    RealizationClass,
    SimplexParams,
    VertexClass,
    build_coxeter_schlafli,
    classify_realization,
    classify_vertex,
    gram_sign_check,
)

CORNER_ZERO_TOL = 1e-12
ORACLE_RESIDUAL_TOL = 1e-9
FD_STEP = 1e-7
CONTRACTION_SAFETY = 1.1
CONTRACTION_GRID = 200
_K_SCHEDULE = (1.0, 1.5, 2.0, 3.0, 5.0)
_LOCAL_RADIUS_START = 0.02
_LOCAL_RADIUS_MIN = 1e-5


class SolverMethod(enum.Enum):
    FIXED_POINT = "FixedPoint"
    NEWTON = "Newton"
    GRID_ORACLE = "GridOracle"
    AUTO = "Auto"


class SolveStatus(enum.Enum):
    SOLVED = "Solved"
    NO_PROPER_SOLUTION = "NoProperSolution"
    BOUNDARY_SOLUTION = "BoundarySolution"
    DIVERGED = "Diverged"


@dataclass(frozen=True)
class DomainBox:
    """Closed coordinate box known to isolate the proper root."""

    alpha1_lo: float
    alpha1_hi: float
    beta1_lo: float
    beta1_hi: float

    def __post_init__(self) -> None:
        if not (self.alpha1_lo < self.alpha1_hi and self.beta1_lo < self.beta1_hi):
            raise ValueError("degenerate domain box")

    @property
    def center(self) -> tuple[float, float]:
        return (
            0.5 * (self.alpha1_lo + self.alpha1_hi),
            0.5 * (self.beta1_lo + self.beta1_hi),
        )

    def clamp(self, alpha1: float, beta1: float) -> tuple[float, float]:
        return (
            min(max(alpha1, self.alpha1_lo), self.alpha1_hi),
            min(max(beta1, self.beta1_lo), self.beta1_hi),
        )

    def contains(self, alpha1: float, beta1: float, slack: float = 0.0) -> bool:
        return (
            self.alpha1_lo - slack <= alpha1 <= self.alpha1_hi + slack
            and self.beta1_lo - slack <= beta1 <= self.beta1_hi + slack
        )


@dataclass(frozen=True)
class SolverConfig:
    """Tunable knobs for solve(); the defaults suit every admissible pair."""

    tolerance: float = 1e-11
    angle_tolerance: float = 1e-12
    max_iterations: int = 2000
    k1: float | None = None
    k2: float | None = None
    method: SolverMethod = SolverMethod.AUTO


@dataclass(frozen=True)
class ContractionEstimate:
    """Sampled sup-norm certificate for the damped update map on a box."""

    k1: float
    k2: float
    norm_bound: float
    box: DomainBox
    resolution: int


@dataclass(frozen=True)
class PropernessReport:
    angles_positive: bool
    determinant_negative: bool
    vertices_outer: bool
    gram_signs: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.angles_positive
            and self.determinant_negative
            and self.vertices_outer
            and self.gram_signs
        )


@dataclass(frozen=True)
class GridRoot:
    alpha1: float
    beta1: float
    residual1: float
    residual2: float


@dataclass(frozen=True)
class SolveReport:
    status: SolveStatus
    angles: DihedralAngles | None
    residual_cond1: float | None
    residual_cond2: float | None
    iterations: int
    contraction_norm_estimate: float | None
    properness: PropernessReport | None
    improper_roots: tuple[tuple[float, float], ...] = ()


def domain_for(params: SimplexParams) -> DomainBox:
    """Reduced search box containing exactly the proper root.

    For the two smallest families part of the nominal alpha1 range is
    excluded analytically (no proper solution lives there), which also cuts
    away the second, improper root of the (2, 3) system.
    """
    a, b = params.a, params.b
    if a == 2:
        alpha_lo, alpha_hi = pi / 3, pi / 2
    elif a == 3:
        alpha_lo, alpha_hi = pi / 12, pi / 3
    else:
        alpha_lo, alpha_hi = 0.0, pi / a
    return DomainBox(alpha_lo, alpha_hi, 0.0, pi / b)


def _eval_conditions(alpha1: float, beta1: float, a: int, b: int) -> tuple[float, float]:
    return (
        float(edge_condition1_raw(alpha1, beta1, a, b)),
        float(edge_condition2_raw(alpha1, beta1, a, b)),
    )


def _auto_damping(params: SimplexParams, box: DomainBox, resolution: int = 64) -> tuple[float, float]:
    """Damping constants k = 2 * sup |directional derivative| over the box."""
    a, b = params.a, params.b
    al = np.linspace(box.alpha1_lo, box.alpha1_hi, resolution)
    be = np.linspace(box.beta1_lo, box.beta1_hi, resolution)
    aa, bb = np.meshgrid(al, be, indexing="ij")
    sup1 = float(np.max(np.abs(edge_condition1_deriv_raw(aa, bb, a, b))))
    sup2 = float(np.max(np.abs(edge_condition2_deriv_raw(aa, bb, a, b))))
    return max(2.0 * sup1, 1e-3), max(2.0 * sup2, 1e-3)


def estimate_contraction(
    params: SimplexParams,
    box: DomainBox | None = None,
    config: SolverConfig | None = None,
    resolution: int = CONTRACTION_GRID,
) -> ContractionEstimate:
    """Certify the damped update map as a sampled sup-norm contraction.

    Samples the Jacobian of (alpha1, beta1) -> (alpha1 + c1/k1, beta1 + c2/k2)
    on a resolution x resolution grid, takes the worst absolute row sum,
    multiplies by a safety factor, and walks a short schedule of damping
    multipliers looking for a bound below one.  Raises NoContraction when
    the whole schedule fails; on the full domain box it always does, since
    the first condition's derivative loses its sign on the alpha1 = pi/a
    edge — certificates exist only on smaller boxes around the root.
    """
    cfg = config or SolverConfig()
    box = box or domain_for(params)
    a, b = params.a, params.b
    al = np.linspace(box.alpha1_lo, box.alpha1_hi, resolution)
    be = np.linspace(box.beta1_lo, box.beta1_hi, resolution)
    aa, bb = np.meshgrid(al, be, indexing="ij")
    d1 = edge_condition1_deriv_raw(aa, bb, a, b)
    d2 = edge_condition2_deriv_raw(aa, bb, a, b)
    e1 = edge_condition1_cross_deriv_raw(aa, bb, a, b)
    e2 = edge_condition2_cross_deriv_raw(aa, bb, a, b)
    base1 = cfg.k1 if cfg.k1 is not None else max(2.0 * float(np.max(np.abs(d1))), 1e-3)
    base2 = cfg.k2 if cfg.k2 is not None else max(2.0 * float(np.max(np.abs(d2))), 1e-3)
    best: ContractionEstimate | None = None
    for mult in _K_SCHEDULE:
        k1, k2 = base1 * mult, base2 * mult
        row1 = np.abs(1.0 + d1 / k1) + np.abs(e1) / k1
        row2 = np.abs(e2) / k2 + np.abs(1.0 + d2 / k2)
        bound = CONTRACTION_SAFETY * float(np.max(np.maximum(row1, row2)))
        if bound < 1.0 and (best is None or bound < best.norm_bound):
            best = ContractionEstimate(k1, k2, bound, box, resolution)
    if best is None:
        raise NoContraction(
            f"no damping multiplier in {_K_SCHEDULE} certifies a contraction "
            f"on the given box for (a, b) = ({a}, {b})"
        )
    return best


def _local_certificate(
    params: SimplexParams, root: tuple[float, float], config: SolverConfig
) -> ContractionEstimate | None:
    """Shrink a box around the root until the sampled certificate holds."""
    a, b = params.a, params.b
    radius = _LOCAL_RADIUS_START
    while radius >= _LOCAL_RADIUS_MIN:
        alo = max(0.0, root[0] - radius)
        ahi = min(pi / a, root[0] + radius)
        blo = max(0.0, root[1] - radius)
        bhi = min(pi / b, root[1] + radius)
        try:
            return estimate_contraction(
                params, DomainBox(alo, ahi, blo, bhi), config
            )
        except NoContraction:
            radius *= 0.5
    return None


def contraction_map(
    params: SimplexParams, box: DomainBox, k1: float, k2: float
) -> "callable":
    """The damped, box-clamped update map used by the fixed-point iteration."""
    a, b = params.a, params.b

    def step(alpha1: float, beta1: float) -> tuple[float, float]:
        c1, c2 = _eval_conditions(alpha1, beta1, a, b)
        return box.clamp(alpha1 + c1 / k1, beta1 + c2 / k2)

    return step


def _newton_polish(
    params: SimplexParams,
    start: tuple[float, float],
    config: SolverConfig,
    max_steps: int = 40,
) -> tuple[tuple[float, float], int, bool]:
    """Finite-difference Newton refinement; returns (point, steps, converged)."""
    a, b = params.a, params.b
    x, y = start
    h = FD_STEP
    best = (x, y)
    best_res = max(abs(v) for v in _eval_conditions(x, y, a, b))
    for step in range(1, max_steps + 1):
        f1, f2 = _eval_conditions(x, y, a, b)
        if max(abs(f1), abs(f2)) < config.tolerance:
            return (x, y), step - 1, True
        j11 = (edge_condition1_raw(x + h, y, a, b) - edge_condition1_raw(x - h, y, a, b)) / (2 * h)
        j12 = (edge_condition1_raw(x, y + h, a, b) - edge_condition1_raw(x, y - h, a, b)) / (2 * h)
        j21 = (edge_condition2_raw(x + h, y, a, b) - edge_condition2_raw(x - h, y, a, b)) / (2 * h)
        j22 = (edge_condition2_raw(x, y + h, a, b) - edge_condition2_raw(x, y - h, a, b)) / (2 * h)
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-300 or not np.isfinite(det):
            break
        dx = (f1 * j22 - f2 * j12) / det
        dy = (j11 * f2 - j21 * f1) / det
        x, y = x - dx, y - dy
        if not (np.isfinite(x) and np.isfinite(y)):
            return best, step, False
        res = max(abs(v) for v in _eval_conditions(x, y, a, b))
        if res < best_res:
            best, best_res = (x, y), res
        if max(abs(dx), abs(dy)) < config.angle_tolerance and res < config.tolerance:
            return (x, y), step, True
    x, y = best
    f1, f2 = _eval_conditions(x, y, a, b)
    return (x, y), max_steps, max(abs(f1), abs(f2)) < config.tolerance


def _fixed_point(
    params: SimplexParams, box: DomainBox, config: SolverConfig
) -> tuple[tuple[float, float], int]:
    k1 = config.k1
    k2 = config.k2
    if k1 is None or k2 is None:
        auto1, auto2 = _auto_damping(params, box)
        k1 = k1 if k1 is not None else auto1
        k2 = k2 if k2 is not None else auto2
    step = contraction_map(params, box, k1, k2)
    x, y = box.center
    iterations = 0
    for iterations in range(1, config.max_iterations + 1):
        xn, yn = step(x, y)
        disp = max(abs(xn - x), abs(yn - y))
        x, y = xn, yn
        if disp < config.angle_tolerance:
            break
    return (x, y), iterations


def _bisect_1d(func, lo: float, hi: float, steps: int = 100) -> float | None:
    flo, fhi = func(lo), func(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        return None
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        fmid = func(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _cell_root(
    params: SimplexParams,
    alo: float,
    ahi: float,
    blo: float,
    bhi: float,
    config: SolverConfig,
) -> tuple[float, float] | None:
    """Locate a common zero inside one flagged grid cell.

    Tries nested bisection in both orientations (inner root of one
    condition along one coordinate, outer bisection of the other condition
    along the other), then falls back to a Newton start at the cell center.
    """
    a, b = params.a, params.b

    def root_alpha(beta: float) -> float | None:
        return _bisect_1d(lambda al: float(edge_condition1_raw(al, beta, a, b)), alo, ahi)

    def outer_beta(beta: float) -> float | None:
        al = root_alpha(beta)
        if al is None:
            return None
        return float(edge_condition2_raw(al, beta, a, b))

    lo_val, hi_val = outer_beta(blo), outer_beta(bhi)
    if lo_val is not None and hi_val is not None and lo_val * hi_val <= 0.0:
        beta = _bisect_1d(lambda bt: outer_beta(bt) or 0.0, blo, bhi)
        if beta is not None:
            al = root_alpha(beta)
            if al is not None:
                return al, beta

    def root_beta(alpha: float) -> float | None:
        return _bisect_1d(lambda bt: float(edge_condition2_raw(alpha, bt, a, b)), blo, bhi)

    def outer_alpha(alpha: float) -> float | None:
        bt = root_beta(alpha)
        if bt is None:
            return None
        return float(edge_condition1_raw(alpha, bt, a, b))

    lo_val, hi_val = outer_alpha(alo), outer_alpha(ahi)
    if lo_val is not None and hi_val is not None and lo_val * hi_val <= 0.0:
        alpha = _bisect_1d(lambda al: outer_alpha(al) or 0.0, alo, ahi)
        if alpha is not None:
            bt = root_beta(alpha)
            if bt is not None:
                return alpha, bt

    center = (0.5 * (alo + ahi), 0.5 * (blo + bhi))
    (x, y), _, converged = _newton_polish(params, center, config)
    diag = hypot(ahi - alo, bhi - blo)
    if converged and hypot(x - center[0], y - center[1]) <= 3.0 * diag:
        return x, y
    return None


def grid_oracle(
    params: SimplexParams,
    resolution: int = 200,
    box: DomainBox | None = None,
    config: SolverConfig | None = None,
) -> list[GridRoot]:
    """Independent root locator: sign-change cells plus nested bisection.

    Flags every grid cell on which both edge conditions change sign (the
    four-corner min/max test), digs the root out of each flagged cell, and
    keeps deduplicated points whose residuals clear the oracle tolerance.
    """
    cfg = config or SolverConfig()
    box = box or domain_for(params)
    a, b = params.a, params.b
    al = np.linspace(box.alpha1_lo, box.alpha1_hi, resolution + 1)
    be = np.linspace(box.beta1_lo, box.beta1_hi, resolution + 1)
    aa, bb = np.meshgrid(al, be, indexing="ij")
    g1 = edge_condition1_raw(aa, bb, a, b)
    g2 = edge_condition2_raw(aa, bb, a, b)

    def corner_stack(g):
        return np.stack(
            [g[:-1, :-1], g[1:, :-1], g[:-1, 1:], g[1:, 1:]], axis=0
        )

    s1 = corner_stack(g1)
    s2 = corner_stack(g2)
    flagged = (
        (s1.min(axis=0) <= 0.0)
        & (s1.max(axis=0) >= 0.0)
        & (s2.min(axis=0) <= 0.0)
        & (s2.max(axis=0) >= 0.0)
    )
    roots: list[GridRoot] = []
    for i, j in zip(*np.nonzero(flagged)):
        found = _cell_root(params, al[i], al[i + 1], be[j], be[j + 1], cfg)
        if found is None:
            continue
        (x, y), _, _ = _newton_polish(params, found, cfg)
        r1, r2 = _eval_conditions(x, y, a, b)
        if max(abs(r1), abs(r2)) >= ORACLE_RESIDUAL_TOL:
            continue
        if not box.contains(x, y, slack=1e-9):
            continue
        if any(hypot(x - r.alpha1, y - r.beta1) < 1e-7 for r in roots):
            continue
        roots.append(GridRoot(float(x), float(y), r1, r2))
    roots.sort(key=lambda r: (r.alpha1, r.beta1))
    return roots


def check_properness(params: SimplexParams, angles: DihedralAngles) -> PropernessReport:
    """Geometric verification of a solved angle tuple."""
    tup = angles.as_tuple()
    angles_positive = all(0.0 < v < pi for v in tup)
    matrix = build_coxeter_schlafli(angles)
    det = matrices.determinant(matrix)
    determinant_negative = det < 0.0
    vertices_outer = True
    for vertex in range(4):
        try:
            if classify_vertex(matrix, vertex) is not VertexClass.OUTER:
                vertices_outer = False
        except AmbiguousSignature:
            vertices_outer = False
    gram_ok = False
    if determinant_negative:
        gram_ok = gram_sign_check(matrices.inverse(matrix))
    return PropernessReport(angles_positive, determinant_negative, vertices_outer, gram_ok)


def _jacobian_det(params: SimplexParams, alpha1: float, beta1: float) -> float:
    a, b = params.a, params.b
    h = FD_STEP
    j11 = (edge_condition1_raw(alpha1 + h, beta1, a, b) - edge_condition1_raw(alpha1 - h, beta1, a, b)) / (2 * h)
    j12 = (edge_condition1_raw(alpha1, beta1 + h, a, b) - edge_condition1_raw(alpha1, beta1 - h, a, b)) / (2 * h)
    j21 = (edge_condition2_raw(alpha1 + h, beta1, a, b) - edge_condition2_raw(alpha1 - h, beta1, a, b)) / (2 * h)
    j22 = (edge_condition2_raw(alpha1, beta1 + h, a, b) - edge_condition2_raw(alpha1, beta1 - h, a, b)) / (2 * h)
    return float(j11 * j22 - j12 * j21)


def _improper_scan(
    params: SimplexParams, proper: tuple[float, float], config: SolverConfig
) -> tuple[tuple[float, float], ...]:
    """Sweep the full constraint box for roots other than the proper one.

    Only transversal zeros are reported: the origin corner of the a = 2
    family is an exact common zero of both conditions with a quartically
    flat neighborhood, and points in that valley clear any pure residual
    threshold without being genuine interior roots.  A non-singular
    Jacobian separates the two cases cleanly.
    """
    a, b = params.a, params.b
    full = DomainBox(0.0, pi / a, 0.0, pi / b)
    extras = []
    for root in grid_oracle(params, resolution=400, box=full, config=config):
        if hypot(root.alpha1 - proper[0], root.beta1 - proper[1]) < 1e-6:
            continue
        if abs(_jacobian_det(params, root.alpha1, root.beta1)) < 1e-8:
            continue
        extras.append((float(root.alpha1), float(root.beta1)))
    return tuple(extras)


def _solved_report(
    params: SimplexParams,
    root: tuple[float, float],
    iterations: int,
    config: SolverConfig,
) -> SolveReport:
    r1, r2 = _eval_conditions(root[0], root[1], params.a, params.b)
    angles = DihedralAngles.from_reduced(params, root[0], root[1])
    properness = check_properness(params, angles)
    certificate = _local_certificate(params, root, config)
    improper: tuple[tuple[float, float], ...] = ()
    if (params.a, params.b) == (2, 3):
        improper = _improper_scan(params, root, config)
    return SolveReport(
        status=SolveStatus.SOLVED,
        angles=angles,
        residual_cond1=r1,
        residual_cond2=r2,
        iterations=iterations,
        contraction_norm_estimate=(
            certificate.norm_bound if certificate is not None else None
        ),
        properness=properness,
        improper_roots=improper,
    )


def solve(params: SimplexParams, config: SolverConfig | None = None) -> SolveReport:
    """Decide solvability and solve the edge-condition system.

    Raises InvalidClass unless the pair classifies as hyperbolic with
    vertices out of the absolute or as the unsolvable remainder; the
    boundary between those two (corner value exactly zero, which the float
    evaluation attains to machine precision) reports the degenerate corner
    root as a boundary solution.
    """
    cfg = config or SolverConfig()
    cls = classify_realization(params)
    if cls not in (RealizationClass.HYPERBOLIC_OUTER, RealizationClass.NO_PROPER_SOLUTION):
        raise InvalidClass(
            f"solve applies to hyperbolic pairs with outer vertices; "
            f"(a, b) = ({params.a}, {params.b}) classifies as {cls.value}"
        )
    corner = corner_value(params)
    if abs(corner) < CORNER_ZERO_TOL:
        angles = DihedralAngles.from_reduced(params, pi / params.a, 0.0)
        r1, r2 = _eval_conditions(pi / params.a, 0.0, params.a, params.b)
        return SolveReport(
            status=SolveStatus.BOUNDARY_SOLUTION,
            angles=angles,
            residual_cond1=r1,
            residual_cond2=r2,
            iterations=0,
            contraction_norm_estimate=None,
            properness=check_properness(params, angles),
        )
    if corner < 0.0:
        return SolveReport(
            status=SolveStatus.NO_PROPER_SOLUTION,
            angles=None,
            residual_cond1=None,
            residual_cond2=None,
            iterations=0,
            contraction_norm_estimate=None,
            properness=None,
        )

    box = domain_for(params)
    method = cfg.method

    def try_fixed_point() -> SolveReport | None:
        point, iters = _fixed_point(params, box, cfg)
        polished, extra, converged = _newton_polish(params, point, cfg)
        if converged and box.contains(*polished, slack=1e-6):
            return _solved_report(params, polished, iters + extra, cfg)
        return None

    def try_newton() -> SolveReport | None:
        polished, steps, converged = _newton_polish(params, box.center, cfg)
        if converged and box.contains(*polished, slack=1e-6):
            return _solved_report(params, polished, steps, cfg)
        return None

    def try_grid() -> SolveReport | None:
        for resolution in (200, 400):
            for root in grid_oracle(params, resolution=resolution, box=box, config=cfg):
                point = (root.alpha1, root.beta1)
                angles = DihedralAngles.from_reduced(params, *point)
                if check_properness(params, angles).all_pass:
                    return _solved_report(params, point, 0, cfg)
        return None

    attempts = {
        SolverMethod.FIXED_POINT: (try_fixed_point,),
        SolverMethod.NEWTON: (try_newton,),
        SolverMethod.GRID_ORACLE: (try_grid,),
        SolverMethod.AUTO: (try_fixed_point, try_newton, try_grid),
    }[method]
    for attempt in attempts:
        report = attempt()
        if report is not None:
            return report
    return SolveReport(
        status=SolveStatus.DIVERGED,
        angles=None,
        residual_cond1=None,
        residual_cond2=None,
        iterations=cfg.max_iterations,
        contraction_norm_estimate=None,
        properness=None,
    )
