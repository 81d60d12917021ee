"""Tests for the edge conditions, their derivatives, and derived tables."""

from math import cos, pi, sin

import numpy as np
import pytest

from hypsimplex import (
    AngleSlice,
    DihedralAngles,
    InvalidParams,
    MinorSpec,
    SimplexParams,
    build_coxeter_schlafli,
    compute_bmax,
    corner_value,
    edge_condition1,
    edge_condition1_deriv,
    edge_condition2,
    edge_condition2_deriv,
    minor,
    realizability_inequality,
    vertex_minor0,
    vertex_minor1,
)
from hypsimplex.conditions import (
    edge_condition1_cross_deriv_raw,
    edge_condition1_raw,
    edge_condition2_cross_deriv_raw,
    edge_condition2_raw,
    edge_condition1_deriv_raw,
    edge_condition2_deriv_raw,
)

from oracles import BMAX_TABLE, TRUE_ROOTS

SAMPLE_PAIRS = ((2, 4), (3, 5), (4, 7), (6, 10))


def random_slices(a, b, count, seed):
    rng = np.random.default_rng(seed)
    p = SimplexParams(a, b)
    out = []
    for _ in range(count):
        out.append(
            AngleSlice(
                float(rng.uniform(0.02, pi / a - 0.02)),
                float(rng.uniform(0.02, pi / b - 0.02)),
                p,
            )
        )
    return out


class TestAngleSlice:
    def test_derived_angles(self):
        s = AngleSlice(0.25, 0.1, SimplexParams(4, 9))
        assert s.alpha2 == pytest.approx(pi / 2 - 0.5)
        assert s.beta2 == pytest.approx(2 * pi / 9 - 0.2)

    def test_box_validation(self):
        p = SimplexParams(4, 9)
        with pytest.raises(ValueError):
            AngleSlice(pi / 4 + 0.01, 0.1, p)
        with pytest.raises(ValueError):
            AngleSlice(0.2, -0.01, p)

    def test_closed_boundary_allowed(self):
        p = SimplexParams(4, 9)
        AngleSlice(0.0, 0.0, p)
        AngleSlice(pi / 4, pi / 9, p)


class TestMinorCrossCheck:
    """The closed trig polynomials must match the cofactor route to 1e-12."""

    def test_vertex_minors_match_matrix_minors(self):
        for (a, b) in SAMPLE_PAIRS:
            for s in random_slices(a, b, 50, seed=a * 100 + b):
                angles = DihedralAngles.from_reduced(s.params, s.alpha1, s.beta1)
                m = build_coxeter_schlafli(angles)
                m0 = minor(m, MinorSpec.without_vertex(0))
                m1 = minor(m, MinorSpec.without_vertex(1))
                m2 = minor(m, MinorSpec.without_vertex(2))
                m3 = minor(m, MinorSpec.without_vertex(3))
                assert vertex_minor0(s) == pytest.approx(m0, abs=1e-12)
                assert vertex_minor0(s) == pytest.approx(m2, abs=1e-12)
                assert vertex_minor1(s) == pytest.approx(m1, abs=1e-12)
                assert vertex_minor1(s) == pytest.approx(m3, abs=1e-12)

    def test_edge_conditions_match_minor_form(self):
        for (a, b) in SAMPLE_PAIRS:
            for s in random_slices(a, b, 50, seed=a * 200 + b):
                angles = DihedralAngles.from_reduced(s.params, s.alpha1, s.beta1)
                m = build_coxeter_schlafli(angles)
                m0 = minor(m, MinorSpec.without_vertex(0))
                m1 = minor(m, MinorSpec.without_vertex(1))
                want1 = m0 * sin(s.beta1) ** 2 - m1 * sin(s.alpha2) ** 2
                want2 = m1 * sin(s.alpha1) ** 2 - m0 * sin(s.beta2) ** 2
                assert edge_condition1(s) == pytest.approx(want1, abs=1e-12)
                assert edge_condition2(s) == pytest.approx(want2, abs=1e-12)


class TestBoundaryIdentities:
    def test_first_condition_on_zero_beta_edge(self):
        # cond1(alpha1, 0) = (cos(alpha1) + cos(beta2))^2 sin(alpha2)^2
        for (a, b) in ((2, 5), (3, 7), (5, 9)):
            for alpha1 in np.linspace(0.0, pi / a, 17):
                alpha2 = 2 * pi / a - 2 * alpha1
                beta2 = 2 * pi / b
                want = (cos(alpha1) + cos(beta2)) ** 2 * sin(alpha2) ** 2
                got = float(edge_condition1_raw(alpha1, 0.0, a, b))
                assert got == pytest.approx(want, abs=1e-12)

    def test_first_condition_on_max_alpha_edge(self):
        # cond1(pi/a, beta1) = -(cos(pi/a) + cos(beta1))^2 sin(beta1)^2
        for (a, b) in ((2, 4), (4, 9), (6, 11)):
            for beta1 in np.linspace(0.0, pi / b, 17):
                want = -((cos(pi / a) + cos(beta1)) ** 2) * sin(beta1) ** 2
                got = float(edge_condition1_raw(pi / a, beta1, a, b))
                assert got == pytest.approx(want, abs=1e-12)

    def test_first_condition_on_zero_alpha_edge_a2(self):
        for beta1 in np.linspace(0.0, pi / 5, 17):
            want = -((1.0 - cos(beta1)) ** 2) * sin(beta1) ** 2
            got = float(edge_condition1_raw(0.0, beta1, 2, 5))
            assert got == pytest.approx(want, abs=1e-12)

    def test_first_condition_on_zero_alpha_edge_general(self):
        for (a, b) in ((3, 6), (5, 8)):
            for beta1 in np.linspace(0.0, pi / b, 17):
                want = (
                    -((cos(2 * pi / a) + cos(beta1)) ** 2) * sin(beta1) ** 2
                    + (cos(beta1) + cos(2 * pi / b - 2 * beta1)) ** 2 * sin(2 * pi / a) ** 2
                )
                got = float(edge_condition1_raw(0.0, beta1, a, b))
                assert got == pytest.approx(want, abs=1e-12)

    def test_second_condition_on_zero_alpha_edge(self):
        # cond2(0, beta1) = (cos(2 pi/a) + cos(beta1))^2 sin(beta2)^2
        for (a, b) in ((3, 6), (4, 7), (6, 9)):
            for beta1 in np.linspace(0.0, pi / b, 17):
                beta2 = 2 * pi / b - 2 * beta1
                want = (cos(2 * pi / a) + cos(beta1)) ** 2 * sin(beta2) ** 2
                got = float(edge_condition2_raw(0.0, beta1, a, b))
                assert got == pytest.approx(want, abs=1e-12)

    def test_second_condition_on_max_beta_edge(self):
        # cond2(alpha1, pi/b) = -(cos(alpha1) + cos(pi/b))^2 sin(alpha1)^2
        for (a, b) in ((2, 6), (4, 8), (6, 12)):
            for alpha1 in np.linspace(0.0, pi / a, 17):
                want = -((cos(alpha1) + cos(pi / b)) ** 2) * sin(alpha1) ** 2
                got = float(edge_condition2_raw(alpha1, pi / b, a, b))
                assert got == pytest.approx(want, abs=1e-12)


class TestDuality:
    def test_condition_swap_symmetry(self):
        rng = np.random.default_rng(77)
        for _ in range(500):
            a = int(rng.integers(2, 9))
            b = int(rng.integers(a + 1, a + 9))
            x = float(rng.uniform(0.0, pi / a))
            y = float(rng.uniform(0.0, pi / b))
            lhs = float(edge_condition1_raw(x, y, a, b))
            rhs = float(edge_condition2_raw(y, x, b, a))
            assert abs(lhs - rhs) < 1e-12, (a, b, x, y)


class TestDerivatives:
    def _fd(self, func, x, y, a, b, axis, h=1e-6):
        if axis == 0:
            return (float(func(x + h, y, a, b)) - float(func(x - h, y, a, b))) / (2 * h)
        return (float(func(x, y + h, a, b)) - float(func(x, y - h, a, b))) / (2 * h)

    def test_own_direction_derivatives(self):
        for (a, b) in SAMPLE_PAIRS:
            for s in random_slices(a, b, 125, seed=a * 300 + b):
                x, y = s.alpha1, s.beta1
                fd1 = self._fd(edge_condition1_raw, x, y, a, b, axis=0)
                fd2 = self._fd(edge_condition2_raw, x, y, a, b, axis=1)
                assert edge_condition1_deriv(s) == pytest.approx(fd1, abs=1e-5)
                assert edge_condition2_deriv(s) == pytest.approx(fd2, abs=1e-5)

    def test_cross_direction_derivatives(self):
        for (a, b) in SAMPLE_PAIRS:
            for s in random_slices(a, b, 60, seed=a * 400 + b):
                x, y = s.alpha1, s.beta1
                fd1 = self._fd(edge_condition1_raw, x, y, a, b, axis=1)
                fd2 = self._fd(edge_condition2_raw, x, y, a, b, axis=0)
                got1 = float(edge_condition1_cross_deriv_raw(x, y, a, b))
                got2 = float(edge_condition2_cross_deriv_raw(x, y, a, b))
                assert got1 == pytest.approx(fd1, abs=1e-5)
                assert got2 == pytest.approx(fd2, abs=1e-5)

    def test_derivatives_negative_at_roots(self):
        # The damped iteration relies on decreasing conditions at the root.
        for (a, b), (x, y) in TRUE_ROOTS.items():
            assert float(edge_condition1_deriv_raw(x, y, a, b)) < 0.0
            assert float(edge_condition2_deriv_raw(x, y, a, b)) < 0.0

    def test_vectorized_evaluation_matches_scalar(self):
        a, b = 3, 5
        xs = np.linspace(0.1, 1.0, 7)
        ys = np.linspace(0.05, 0.6, 7)
        grid1 = edge_condition1_raw(xs[:, None], ys[None, :], a, b)
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                assert grid1[i, j] == pytest.approx(
                    float(edge_condition1_raw(float(x), float(y), a, b)), abs=1e-15
                )


class TestRealizabilityInequality:
    def test_strict_for_admissible_pairs(self):
        for (a, b) in TRUE_ROOTS:
            lhs, rhs, strict = realizability_inequality(SimplexParams(a, b))
            assert strict and lhs > rhs

    def test_equality_at_the_boundary_pair(self):
        lhs, rhs, strict = realizability_inequality(SimplexParams(2, 8))
        assert not strict
        assert abs(lhs - rhs) < 1e-12

    def test_fails_beyond_the_boundary(self):
        lhs, rhs, strict = realizability_inequality(SimplexParams(2, 9))
        assert not strict and lhs < rhs

    def test_rejects_bad_parameters(self):
        with pytest.raises(InvalidParams):
            realizability_inequality(SimplexParams(3, 3))
        with pytest.raises(InvalidParams):
            realizability_inequality(SimplexParams(1, 5))


class TestComputeBmax:
    def test_reference_table(self):
        for a, want in BMAX_TABLE.items():
            assert compute_bmax(a) == want

    def test_unbounded_sentinel_at_scan_ceiling(self):
        # Strict inequality still holding at the ceiling itself -> None,
        # since the admissible range may continue past the scan.
        assert compute_bmax(2, b_limit=7) is None
        assert compute_bmax(2, b_limit=6) is None
        assert compute_bmax(2, b_limit=9) == 7

    def test_rejects_bad_arguments(self):
        with pytest.raises(InvalidParams):
            compute_bmax(1)
        with pytest.raises(InvalidParams):
            compute_bmax(3, b_limit=3)


class TestCornerValue:
    def test_positive_for_admissible(self):
        assert corner_value(SimplexParams(2, 4)) > 0.0
        assert corner_value(SimplexParams(6, 12)) > 0.0

    def test_zero_at_boundary_pair(self):
        assert abs(corner_value(SimplexParams(2, 8))) < 1e-12

    def test_negative_beyond(self):
        assert corner_value(SimplexParams(2, 9)) < 0.0
        assert corner_value(SimplexParams(3, 9)) < 0.0

    def test_rejects_bad_parameters(self):
        with pytest.raises(InvalidParams):
            corner_value(SimplexParams(2, 2))
