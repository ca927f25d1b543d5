import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rrcflab.numerics import DomainError, PrecisionContext
from rrcflab.quadrature import integrate_finite
from rrcflab.special import (BetaBase, PoleError, appell_f1, beta_sqrt,
                             complete_beta, elliptic_k,
                             elliptic_k_complementary, gamma, gauss_2f1,
                             incomplete_beta, pn_poly, pochhammer,
                             pochhammer_negative, quadratic_antiderivative_f1,
                             quadratic_power_quadrature,
                             quadratic_power_series, sin_multiple_p6)

# int_0^inf e^-t t^(1/6 - 1) dt by tanh-sinh quadrature (independent oracle)
GAMMA_SIXTH_ORACLE = 5.566316001780237


class TestGamma:
    def test_half(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    def test_factorial(self):
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-13)

    def test_sixth_against_quadrature_oracle(self):
        assert gamma(1.0 / 6.0) == pytest.approx(GAMMA_SIXTH_ORACLE, rel=1e-12)

    def test_real_axis_window(self):
        for x in (0.05, 0.3, 1.7, 12.0, 50.0):
            assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-12)

    def test_pole(self):
        with pytest.raises(PoleError):
            gamma(-3.0)

    def test_complex_input_returns_complex(self):
        assert isinstance(gamma(0.5 + 1.0j), complex)
        assert isinstance(gamma(0.5), float)

    @pytest.mark.parametrize("z", [0.1, 0.3, 0.7, 0.25 + 0.5j, -0.4 + 1.2j])
    def test_reflection(self, z):
        val = gamma(complex(z)) * gamma(complex(1.0 - z)) \
            * cmath.sin(math.pi * z) / math.pi
        assert abs(val - 1.0) < 1e-11


class TestGauss2F1:
    def test_at_zero(self):
        assert gauss_2f1(0.3, 0.7, 1.1, 0.0) == 1.0

    def test_log_closed_form(self):
        z = 0.3
        assert gauss_2f1(1.0, 1.0, 2.0, z) == pytest.approx(
            -math.log(1.0 - z) / z, rel=1e-11)

    def test_series_vs_integral_at_quintic_argument(self):
        z = (11.0 - 5.0 * math.sqrt(5.0)) / (11.0 + 5.0 * math.sqrt(5.0))
        s = gauss_2f1(1 / 6, 7 / 6, 2.0, z, method="series")
        i = gauss_2f1(1 / 6, 7 / 6, 2.0, z, method="integral")
        assert s == pytest.approx(i, rel=1e-10)

    def test_euler_transform_window(self):
        # |z| in (0.8, 1) goes through the Euler transformation
        val = gauss_2f1(0.25, 0.5, 1.5, 0.9)
        ref = gauss_2f1(0.25, 0.5, 1.5, 0.9, method="integral")
        assert val == pytest.approx(ref, rel=1e-10)

    def test_terminating(self):
        assert gauss_2f1(-2.0, 1.0, 3.0, 2.0) == pytest.approx(
            1.0 - 2.0 * 2.0 / 3.0 + (2.0 / 12.0) * 4.0, rel=1e-13)

    def test_bad_c(self):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 0.5, -1.0, 0.3)


class TestAppellF1:
    def test_reduces_to_2f1_at_zero_second_argument(self):
        lhs = appell_f1(0.9, 1.0, 1.0, 2.0, 0.3, 0.0)
        assert lhs == pytest.approx(gauss_2f1(0.9, 1.0, 2.0, 0.3), rel=1e-11)

    def test_swap_symmetry(self):
        a = appell_f1(0.9, 1.0, 1.0, 2.0, 0.3, 0.2j)
        b = appell_f1(0.9, 1.0, 1.0, 2.0, 0.2j, 0.3)
        assert abs(a - b) < 1e-12 * abs(a)

    def test_series_vs_integral(self):
        a = appell_f1(0.9, 1.0, 1.0, 2.0, 0.3, 0.2j)
        b = appell_f1(0.9, 1.0, 1.0, 2.0, 0.3, 0.2j, method="integral")
        assert abs(a - b) < 1e-9 * abs(a)

    def test_antiderivative_of_quadratic_surd(self):
        # int_0^0.4 x^2 (x^2+x+1)^(1/2) dx against the F1 closed form
        quad = integrate_finite(
            lambda x: x * x * math.sqrt(x * x + x + 1.0), 0.0, 0.4)
        closed = quadratic_antiderivative_f1(2.0, 0.5, 1.0, 1.0, 1.0, 0.4)
        assert abs(closed.imag) < 1e-12
        assert closed.real == pytest.approx(quad, rel=1e-9)


class TestIncompleteBeta:
    def test_at_zero(self):
        assert incomplete_beta(0.0, BetaBase(0.4, 2.0)) == 0.0

    def test_uniform_base(self):
        assert incomplete_beta(0.37, BetaBase(1.0, 1.0)) == pytest.approx(
            0.37, rel=1e-13)

    def test_against_quadrature(self):
        base = BetaBase(1 / 6, 2 / 3)
        direct = integrate_finite(
            lambda t: t ** (1 / 6 - 1) * (1 - t) ** (2 / 3 - 1), 0.0, 0.8,
            singular_at_a=True)
        assert incomplete_beta(0.8, base) == pytest.approx(direct, rel=1e-10)

    def test_rejects_outside_unit_interval(self):
        with pytest.raises(DomainError):
            incomplete_beta(1.5, BetaBase(1.0, 1.0))

    @given(st.sampled_from([1 / 6, 1 / 4, 1 / 3, 1 / 2]),
           st.sampled_from([0.1, 0.25, 0.5]))
    @settings(max_examples=12, deadline=None)
    def test_complement_identity(self, alpha, x):
        base = BetaBase(alpha, alpha)
        total = incomplete_beta(x, base) + incomplete_beta(1.0 - x, base)
        expected = gamma(alpha) ** 2 / gamma(2.0 * alpha)
        assert total == pytest.approx(expected, rel=1e-11)

    def test_complement_constant_is_pi_at_half(self):
        base = BetaBase(0.5, 0.5)
        total = incomplete_beta(0.3, base) + incomplete_beta(0.7, base)
        assert total == pytest.approx(math.pi, rel=1e-12)

    def test_monotone(self):
        base = BetaBase(1 / 6, 2 / 3)
        values = [incomplete_beta(x, base) for x in (0.1, 0.3, 0.6, 0.9)]
        assert values == sorted(values)

    def test_beta_sqrt(self):
        assert beta_sqrt(0.3, 0.5) == pytest.approx(
            math.sqrt(2.0 * math.asin(math.sqrt(0.3))), rel=1e-12)


class TestEllipticK:
    def test_at_zero(self):
        assert elliptic_k(0.0) == pytest.approx(math.pi / 2.0, rel=1e-15)

    def test_lemniscatic_value(self):
        # K(1/sqrt2) = Gamma(1/4)^2 / (4 sqrt(pi))
        assert elliptic_k(1.0 / math.sqrt(2.0)) == pytest.approx(
            1.854074677301372, rel=1e-14)

    def test_quarter_period_ratio_at_silver_modulus(self):
        k = 3.0 - 2.0 * math.sqrt(2.0)
        assert elliptic_k_complementary(k) / elliptic_k(k) == pytest.approx(
            2.0, rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            elliptic_k(1.0)


class TestPnPoly:
    def test_constant(self):
        assert pn_poly(0, 0.7, 0.9) == 1.0

    def test_geometric_reduction(self):
        assert pn_poly(4, 1.0, 0.5) == pytest.approx(1.9375, rel=1e-14)

    def test_against_convolution_oracle(self):
        # n! / (nu)_n * sum_l (nu)_l (nu)_(n-l) x^l / (l! (n-l)!)
        n, nu, x = 2, 0.5, 0.3
        conv = sum(pochhammer(nu, l) * pochhammer(nu, n - l) * x ** l
                   / (math.factorial(l) * math.factorial(n - l))
                   for l in range(n + 1))
        oracle = math.factorial(n) * conv / pochhammer(nu, n)
        assert pn_poly(n, nu, x) == pytest.approx(oracle, rel=1e-13)

    def test_rejects_negative_order(self):
        with pytest.raises(DomainError):
            pn_poly(-1, 0.5, 0.1)


class TestSinSextuple:
    @pytest.mark.parametrize("y", [0.0, 1.0, -1.0])
    def test_vanishes_at_cardinal_points(self, y):
        assert sin_multiple_p6(y) == pytest.approx(0.0, abs=1e-15)

    def test_quarter(self):
        assert sin_multiple_p6(0.25) == pytest.approx(
            math.sin(6.0 * math.asin(0.25)), rel=1e-14)

    @given(st.floats(min_value=-1.0, max_value=1.0))
    @settings(max_examples=60, deadline=None)
    def test_matches_transcendental(self, y):
        assert sin_multiple_p6(y) == pytest.approx(
            math.sin(6.0 * math.asin(y)), abs=1e-13)


class TestQuadraticPowerSeries:
    def test_against_quadrature(self):
        args = (-5 / 6, 5 / 12, 1.0, -2.0, 1.0, 0.01)
        series = quadratic_power_series(*args)
        quad = quadratic_power_quadrature(*args)
        assert complex(series.value).real == pytest.approx(quad, rel=1e-12)

    def test_complex_roots_real_result(self):
        args = (0.0, 0.5, 1.0, 1.0, 1.0, 0.4)
        series = quadratic_power_series(*args)
        quad = quadratic_power_quadrature(*args)
        assert abs(complex(series.value).imag) < 1e-13
        assert complex(series.value).real == pytest.approx(quad, rel=1e-11)


class TestNegativePochhammer:
    def test_matches_gamma_quotient(self):
        # (3/4)_(-2) = Gamma(3/4 - 2)/Gamma(3/4) = 1/((3/4-2)(3/4-1))
        assert pochhammer_negative(0.75, 2) == pytest.approx(16.0 / 5.0, rel=1e-14)

    def test_reduces_arcsin_coefficient(self):
        for n in range(1, 6):
            coeff = pochhammer(0.25, n) * pochhammer_negative(0.75, n) \
                / pochhammer_negative(0.5, n)
            assert coeff == pytest.approx(pochhammer(0.5, n), rel=1e-12)
