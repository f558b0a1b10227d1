import cmath
import math
import random

import numpy as np
import pytest

from opendoor import (
    DomainError,
    InitialPoint,
    OpenDoorParams,
    c_n_constant,
    certified_strip,
    eval_r,
    lower_branch,
    mocanu_theta,
    sector_angles,
    solve_xi,
    theta_to_x,
    u_cap,
    upper_branch,
    v_extrema,
)

from helpers import random_initial, random_params

MOCANU_THETA_HALF = 1.0178761194653918  # frozen high-precision value


def branch_arrays(params, xs):
    # independent numpy oracle for the branch heights, written from the
    # defining formulas rather than through the library path
    r, t = params.initial.r, params.initial.t
    b = math.sin(math.pi * params.alpha / 2)
    k = params.n * params.alpha / (2 * math.cos(t))
    vp = b * (r * xs) ** params.alpha + k * (xs - 2 * math.sin(t) + 1 / xs)
    vm = -b * (r * xs) ** params.alpha - k * (xs + 2 * math.sin(t) + 1 / xs)
    return vp, vm


class TestThetaToX:
    def test_angle_pi(self):
        assert theta_to_x(math.pi, 0.0) == pytest.approx(0.0, abs=1e-15)

    def test_quarter_turn(self):
        assert theta_to_x(math.pi / 2, 0.0) == pytest.approx(1.0, abs=1e-15)

    def test_trig_oracle(self):
        t = math.atan2(3, 4)
        want = math.cos(math.pi / 6) / math.sin(math.pi / 6) * 0.8 + 0.6
        assert theta_to_x(math.pi / 3, t) == pytest.approx(want, abs=1e-14)

    @pytest.mark.parametrize("theta", [0.0, 2 * math.pi, -0.5, 7.0])
    def test_domain(self, theta):
        with pytest.raises(DomainError):
            theta_to_x(theta, 0.0)


class TestBranches:
    def test_alpha_one_point(self):
        p = OpenDoorParams.from_c(1.0, 1 + 0j, 1)
        point = upper_branch(p, 1.0)
        assert point.u == 0.0
        assert point.v == pytest.approx(2.0, abs=1e-15)

    def test_matches_unit_circle_limit(self):
        # boundary parameterization against R evaluated just inside the circle
        p = OpenDoorParams.from_c(0.5, 4 + 3j, 2)
        t = p.initial.t
        for theta in np.linspace(0.1, 2 * math.pi - 0.1, 37):
            x = theta_to_x(theta, t)
            if abs(x) < 1e-2:
                continue
            value = eval_r(p, (1 - 1e-9) * cmath.exp(1j * theta))
            point = upper_branch(p, x) if x > 0 else lower_branch(p, -x)
            assert abs(value - complex(point.u, point.v)) < 1e-5

    def test_term_by_term_oracle(self):
        p = OpenDoorParams.from_c(0.5, 4 + 3j, 2)
        point = upper_branch(p, 1.0)
        a = b = math.sqrt(2) / 2
        assert point.u == pytest.approx(a * math.sqrt(5), rel=1e-14)
        assert point.v == pytest.approx(b * math.sqrt(5) + (1 / 1.6) * (1 - 1.2 + 1), rel=1e-14)

    def test_u_shared_between_branches(self):
        rng = random.Random(3)
        for _ in range(50):
            p = random_params(rng, alpha_range=(0.05, 1.0))
            x = math.exp(rng.uniform(-3, 3))
            assert upper_branch(p, x).u == lower_branch(p, x).u

    def test_branch_signs(self):
        rng = random.Random(5)
        xs = np.exp(np.linspace(math.log(1e-3), math.log(1e3), 300))
        for _ in range(30):
            p = random_params(rng, alpha_range=(0.05, 1.0))
            for x in xs:
                assert upper_branch(p, float(x)).v > 0.0
                assert lower_branch(p, float(x)).v < 0.0

    @pytest.mark.parametrize("x", [0.0, -1.0])
    def test_domain(self, x):
        p = OpenDoorParams.from_c(0.5, 1 + 0j, 1)
        with pytest.raises(DomainError):
            upper_branch(p, x)
        with pytest.raises(DomainError):
            lower_branch(p, x)


class TestExtremaAndStrips:
    def test_classical_window(self):
        strip = v_extrema(OpenDoorParams.from_c(1.0, 1 + 0j, 1))
        assert strip.lower == pytest.approx(-math.sqrt(3), abs=1e-12)
        assert strip.upper == pytest.approx(math.sqrt(3), abs=1e-12)
        assert strip.kind == "exact"

    def test_alpha_one_gives_slit_constants(self):
        rng = random.Random(7)
        for _ in range(300):
            ip = random_initial(rng)
            n = rng.randint(1, 8)
            strip = v_extrema(OpenDoorParams(1.0, ip, n))
            assert strip.lower == pytest.approx(-c_n_constant(ip, n), rel=1e-12)
            assert strip.upper == pytest.approx(c_n_constant(ip.conjugate(), n), rel=1e-12)

    def test_u_form_matches_direct_branch_value(self):
        rng = random.Random(9)
        for _ in range(100):
            p = random_params(rng, alpha_range=(0.05, 1.0))
            xi = solve_xi(p.A, p.alpha).xi
            strip = v_extrema(p)
            assert strip.upper == pytest.approx(upper_branch(p, xi).v, rel=1e-11)
            assert strip.lower == pytest.approx(lower_branch(p, xi).v, rel=1e-11)

    def test_grid_minimum_oracle(self):
        rng = random.Random(11)
        xs = np.exp(np.linspace(math.log(0.05), math.log(1.5), 100000))
        for _ in range(20):
            p = random_params(rng, alpha_range=(0.05, 1.0), re_range=(0.2, 4.0), im_range=(-3.0, 3.0))
            vp, vm = branch_arrays(p, xs)
            strip = v_extrema(p)
            assert abs(vp.min() - strip.upper) <= 1e-8 * abs(strip.upper)
            assert abs(vm.max() - strip.lower) <= 1e-8 * abs(strip.lower)

    def test_certified_inside_exact(self):
        rng = random.Random(13)
        for _ in range(200):
            p = random_params(rng, alpha_range=(0.05, 0.999))
            exact, certified = v_extrema(p), certified_strip(p)
            assert exact.lower < certified.lower < certified.upper < exact.upper

    def test_certified_equals_exact_at_alpha_one(self):
        rng = random.Random(15)
        for _ in range(100):
            p = random_params(rng, alpha_range=(1.0, 1.0))
            exact, certified = v_extrema(p), certified_strip(p)
            assert certified.lower == pytest.approx(exact.lower, rel=1e-12)
            assert certified.upper == pytest.approx(exact.upper, rel=1e-12)

    def test_certified_strip_classical(self):
        strip = certified_strip(OpenDoorParams.from_c(1.0, 1 + 0j, 1))
        assert strip.lower == pytest.approx(-math.sqrt(3), abs=1e-14)
        assert strip.upper == pytest.approx(math.sqrt(3), abs=1e-14)
        assert strip.kind == "certified"

    def test_certified_strip_figure_configuration(self):
        strip = certified_strip(OpenDoorParams.from_c(0.5, 4 + 3j, 2))
        # center -n alpha tan t = -0.75, half-width from A = 1.26491...
        assert 0.5 * (strip.lower + strip.upper) == pytest.approx(-0.75, abs=1e-13)
        assert strip.lower == pytest.approx(-3.156511188480251, abs=1e-12)
        assert strip.upper == pytest.approx(1.656511188480251, abs=1e-12)

    def test_certified_strip_alpha_one_identity(self):
        rng = random.Random(17)
        for _ in range(300):
            ip = random_initial(rng)
            n = rng.randint(1, 8)
            strip = certified_strip(OpenDoorParams(1.0, ip, n))
            assert strip.lower == pytest.approx(-c_n_constant(ip, n), rel=1e-12)
            assert strip.upper == pytest.approx(c_n_constant(ip.conjugate(), n), rel=1e-12)

    def test_u_cap_positive_below_one_zero_at_one(self):
        p = OpenDoorParams.from_c(0.5, 4 + 3j, 2)
        xi = solve_xi(p.A, p.alpha).xi
        assert u_cap(p) == pytest.approx(upper_branch(p, xi).u, rel=1e-12)
        assert u_cap(p) > 0
        assert u_cap(OpenDoorParams.from_c(1.0, 4 + 3j, 2)) == 0.0


class TestSectorAngles:
    def test_symmetric_case_against_mocanu(self):
        angles = sector_angles(OpenDoorParams.from_c(0.5, 1 + 0j, 1))
        assert angles.xi_plus == pytest.approx(math.sqrt(3), rel=1e-14)
        assert angles.xi_minus == pytest.approx(math.sqrt(3), rel=1e-14)
        assert angles.theta_plus == pytest.approx(MOCANU_THETA_HALF, abs=1e-13)
        assert angles.theta_minus == pytest.approx(MOCANU_THETA_HALF, abs=1e-13)

    def test_real_c_symmetry(self):
        for alpha in (0.2, 0.5, 0.8):
            p = OpenDoorParams.from_c(alpha, 2.5 + 0j, 3)
            angles = sector_angles(p)
            want = math.sqrt((1 + alpha) / (1 - alpha))
            assert angles.xi_plus == pytest.approx(want, rel=1e-13)
            assert angles.xi_minus == pytest.approx(want, rel=1e-13)
            assert angles.theta_plus == angles.theta_minus

    def test_positive_imaginary_ordering(self):
        angles = sector_angles(OpenDoorParams.from_c(0.5, 4 + 3j, 2))
        assert angles.xi_minus > angles.xi_plus
        assert angles.theta_minus > angles.theta_plus

    def test_angle_and_tangent_bounds(self):
        rng = random.Random(19)
        for _ in range(200):
            p = random_params(rng, alpha_range=(0.05, 0.95))
            angles = sector_angles(p)
            half = math.pi * p.alpha / 2
            assert half < angles.theta_plus < math.pi / 2
            assert half < angles.theta_minus < math.pi / 2
            assert angles.t_minus < -math.tan(half) < math.tan(half) < angles.t_plus
            assert angles.t_minus < p.alpha * p.initial.t < angles.t_plus

    def test_estimate_orientation_for_positive_imaginary(self):
        # xi_plus < sqrt((1+alpha)/(1-alpha)) < xi_minus and xi_plus < 1/sin t
        rng = random.Random(21)
        for _ in range(200):
            p = random_params(rng, alpha_range=(0.05, 0.95), im_range=(0.05, 5.0))
            angles = sector_angles(p)
            middle = math.sqrt((1 + p.alpha) / (1 - p.alpha))
            assert angles.xi_plus < middle < angles.xi_minus
            assert angles.xi_plus < 1.0 / math.sin(p.initial.t)

    def test_ratio_extrema_grid_oracle(self):
        rng = random.Random(25)
        xs = np.exp(np.linspace(math.log(0.02), math.log(50.0), 200000))
        for _ in range(10):
            p = random_params(rng, alpha_range=(0.1, 0.9), re_range=(0.3, 3.0), im_range=(-2.0, 2.0))
            a = math.cos(math.pi * p.alpha / 2)
            vp, vm = branch_arrays(p, xs)
            us = a * (p.initial.r * xs) ** p.alpha
            angles = sector_angles(p)
            assert abs((vp / us).min() - angles.t_plus) <= 1e-7 * abs(angles.t_plus)
            assert abs((vm / us).max() - angles.t_minus) <= 1e-7 * abs(angles.t_minus)

    def test_monotone_auxiliary(self):
        # x^(1-alpha) - x^(-1-alpha) increases, so larger xi gives larger angle
        xs = np.exp(np.linspace(-3, 3, 500))
        for alpha in (0.1, 0.5, 0.9):
            values = xs ** (1 - alpha) - xs ** (-1 - alpha)
            assert np.all(np.diff(values) > 0)

    def test_alpha_one_rejected(self):
        with pytest.raises(DomainError):
            sector_angles(OpenDoorParams.from_c(1.0, 1 + 0j, 1))


class TestMocanuTheta:
    def test_frozen_value(self):
        assert mocanu_theta(0.5) == pytest.approx(MOCANU_THETA_HALF, abs=1e-15)

    def test_small_alpha_limit(self):
        alpha = 1e-6
        theta = mocanu_theta(alpha)
        assert math.pi * alpha / 2 < theta < 1e-5

    def test_matches_sector_angles(self):
        for alpha in np.linspace(0.02, 0.98, 25):
            angles = sector_angles(OpenDoorParams.from_c(float(alpha), 1 + 0j, 1))
            want = mocanu_theta(float(alpha))
            assert abs(angles.theta_plus - want) <= 1e-12
            assert abs(angles.theta_minus - want) <= 1e-12

    @pytest.mark.parametrize("alpha", [0.0, 1.0, 1.5, -0.3])
    def test_domain(self, alpha):
        with pytest.raises(DomainError):
            mocanu_theta(alpha)
