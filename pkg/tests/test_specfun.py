import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from hlmax.errors import DomainError
from hlmax.specfun import (
    CapSpec,
    cap_area_bounds,
    cap_area_exact,
    gamma_ratio_bounds_hold,
    log_ball_volume,
    log_cap_fraction,
    log_gamma,
    log_sphere_area,
)

from oracles import mc_ball_volume, normalized_cap_by_quadrature, sphere_area_linear


class TestLogGamma:
    def test_gamma_one(self):
        assert log_gamma(1.0) == 0.0

    def test_gamma_half(self):
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)

    def test_against_exact_factorial(self):
        # ln Gamma(n+1) = ln n! with n! computed in exact integer arithmetic
        for n in (5, 20, 100, 170):
            exact = math.log(math.factorial(n))
            assert log_gamma(n + 1.0) == pytest.approx(exact, rel=1e-13)

    def test_nonpositive_rejected(self):
        with pytest.raises(DomainError):
            log_gamma(0.0)
        with pytest.raises(DomainError):
            log_gamma(-2.5)

    @given(x=st.floats(min_value=0.5, max_value=5e5))
    def test_duplication_identity(self, x):
        # Gamma(2x) = Gamma(x) Gamma(x+1/2) 2^(2x-1) / sqrt(pi)
        left = log_gamma(2.0 * x)
        right = (
            log_gamma(x)
            + log_gamma(x + 0.5)
            + (2.0 * x - 1.0) * math.log(2.0)
            - 0.5 * math.log(math.pi)
        )
        assert left == pytest.approx(right, rel=1e-12, abs=1e-10)


class TestBallAndSphere:
    def test_interval(self):
        assert log_ball_volume(1).log_magnitude == pytest.approx(math.log(2.0), rel=1e-15)

    def test_disk(self):
        assert log_ball_volume(2).log_magnitude == pytest.approx(math.log(math.pi), rel=1e-15)

    def test_three_ball(self):
        expected = math.log(4.0 * math.pi / 3.0)
        assert log_ball_volume(3).log_magnitude == pytest.approx(expected, rel=1e-14)

    def test_three_ball_against_monte_carlo(self):
        vol = math.exp(log_ball_volume(3).log_magnitude)
        assert vol == pytest.approx(mc_ball_volume(3), rel=1e-2)

    def test_circle(self):
        assert log_sphere_area(2).log_magnitude == pytest.approx(math.log(2 * math.pi), rel=1e-15)

    def test_two_sphere(self):
        assert log_sphere_area(3).log_magnitude == pytest.approx(math.log(4 * math.pi), rel=1e-15)

    def test_sphere_recursion_d10(self):
        # sigma^{d-1} = sigma^{d-2} * int_0^pi sin^{d-2}
        from oracles import sin_power_integral

        direct = math.exp(log_sphere_area(10).log_magnitude)
        recursed = sphere_area_linear(9) * sin_power_integral(8, math.pi)
        assert direct == pytest.approx(recursed, rel=1e-12)

    def test_sphere_is_d_times_ball(self):
        for d in (1, 2, 3, 7, 50, 1000):
            gap = log_sphere_area(d).log_magnitude - log_ball_volume(d).log_magnitude
            assert gap == pytest.approx(math.log(d), abs=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            log_ball_volume(0)
        with pytest.raises(DomainError):
            log_sphere_area(-3)


class TestCapExact:
    def test_hemisphere(self):
        for d in (2, 5, 100, 2000):
            cap = CapSpec.from_cos(d, 0.0)
            assert cap_area_exact(cap).log_magnitude == pytest.approx(
                math.log(0.5), abs=1e-13
            )

    def test_circle_arc(self):
        for theta in (0.1, math.pi / 3, 1.2, 1.5):
            cap = CapSpec(2, math.cos(theta), math.sin(theta))
            assert cap_area_exact(cap).log_magnitude == pytest.approx(
                math.log(theta / math.pi), abs=1e-12
            )

    def test_d10_against_direct_quadrature(self):
        cap = CapSpec.from_cos(10, 0.5)
        exact = cap_area_exact(cap).log_magnitude
        oracle = math.log(normalized_cap_by_quadrature(10, 0.5))
        assert exact == pytest.approx(oracle, abs=1e-11)
        lo, hi = cap_area_bounds(cap)
        assert lo.log_magnitude < exact < hi.log_magnitude

    def test_against_scipy_betainc(self):
        # same identity through an entirely separate implementation
        for d, s in [(3, 0.2), (17, 0.7), (101, 0.3), (400, 0.9)]:
            cap = CapSpec.from_cos(d, s)
            ours = cap_area_exact(cap).log_magnitude
            ref = math.log(0.5 * special.betainc(0.5 * (d - 1), 0.5, cap.t ** 2))
            assert ours == pytest.approx(ref, abs=1e-11)

    def test_decreasing_in_s_and_d(self):
        vals = [
            cap_area_exact(CapSpec.from_cos(30, s)).log_magnitude
            for s in np.linspace(0.05, 0.95, 10)
        ]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        vals_d = [
            cap_area_exact(CapSpec.from_cos(d, 0.4)).log_magnitude
            for d in (2, 3, 5, 10, 50, 400)
        ]
        assert all(a > b for a, b in zip(vals_d, vals_d[1:]))

    def test_capspec_validation(self):
        with pytest.raises(DomainError):
            CapSpec(1, 0.5, math.sqrt(0.75))
        with pytest.raises(DomainError):
            CapSpec(3, 0.5, 0.5)
        with pytest.raises(DomainError):
            CapSpec(3, 1.0, 0.0)


class TestCapBounds:
    def test_main_configuration_brackets_exact(self):
        # the cap with cos = 3/8, sin = sqrt(55)/8 at d = 100
        cap = CapSpec(100, 3.0 / 8.0, math.sqrt(55.0) / 8.0)
        lo, hi = cap_area_bounds(cap)
        exact = cap_area_exact(cap).log_magnitude
        assert lo.log_magnitude <= exact <= hi.log_magnitude

    def test_circle_case_brackets_third(self):
        cap = CapSpec(2, 0.5, math.sqrt(3.0) / 2.0)
        lo, hi = cap_area_bounds(cap)
        third = math.log(1.0 / 3.0)
        assert lo.log_magnitude <= third <= hi.log_magnitude

    def test_d50_high_s(self):
        cap = CapSpec.from_cos(50, 0.9)
        lo, hi = cap_area_bounds(cap)
        exact = cap_area_exact(cap).log_magnitude
        assert lo.log_magnitude <= exact <= hi.log_magnitude

    def test_s_zero_rejected(self):
        with pytest.raises(DomainError):
            cap_area_bounds(CapSpec.from_cos(5, 0.0))

    def test_sandwich_sweep_wide(self):
        # the full-width d sweep; the dense version runs in the acceptance suite
        s_grid = np.linspace(0.02, 0.99, 50)
        for d in (2, 3, 5, 10, 31, 100, 316, 1000, 2000):
            for s in s_grid:
                cap = CapSpec.from_cos(d, float(s))
                lo, hi = cap_area_bounds(cap)
                exact = cap_area_exact(cap).log_magnitude
                assert lo.log_magnitude - 1e-10 <= exact <= hi.log_magnitude + 1e-10


class TestGammaRatio:
    def test_small_dimensions(self):
        assert gamma_ratio_bounds_hold(1)
        assert gamma_ratio_bounds_hold(2)

    def test_large_dimension(self):
        assert gamma_ratio_bounds_hold(10000)

    def test_values_match_direct_evaluation(self):
        # d=1: 1/sqrt2 <= Gamma(3/2)/Gamma(1) = sqrt(pi)/2 <= 1
        mid = math.exp(log_gamma(1.5) - log_gamma(1.0))
        assert mid == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-14)
        # d=2: 1 <= Gamma(2)/Gamma(3/2) = 2/sqrt(pi) <= sqrt(3/2)
        mid = math.exp(log_gamma(2.0) - log_gamma(1.5))
        assert mid == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-14)


class TestCapFraction:
    def test_complement_symmetry(self):
        # fraction(s) + fraction(-s) = 1
        for d in (2, 3, 10, 200):
            for s in (0.1, 0.4, 0.8):
                f_pos = math.exp(float(log_cap_fraction(d, s)[0]))
                f_neg = math.exp(float(log_cap_fraction(d, -s)[0]))
                assert f_pos + f_neg == pytest.approx(1.0, abs=1e-13)

    def test_extremes(self):
        assert float(log_cap_fraction(5, -1.0)[0]) == 0.0
        assert float(log_cap_fraction(5, 1.0)[0]) == -math.inf

    @settings(max_examples=50)
    @given(
        d=st.integers(min_value=2, max_value=500),
        s=st.floats(min_value=-0.999, max_value=0.999),
    )
    def test_monotone_in_s(self, d, s):
        eps = 5e-4
        lo = float(log_cap_fraction(d, min(s + eps, 0.9995))[0])
        hi = float(log_cap_fraction(d, s)[0])
        assert hi >= lo - 1e-12
