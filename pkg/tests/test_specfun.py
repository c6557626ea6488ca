import cmath
import math
import random
import warnings
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pzeta import specfun
from pzeta.errors import ConvergenceError, DomainError, E1OverflowError, PoleError
from pzeta.specfun import (
    E1_CROSSOVER,
    SeriesControl,
    e1_quadrature_oracle,
    exp_integral_e1,
    exp_integral_ei,
    log_integral,
    riemann_zeta,
)

EULER_GAMMA_40 = mpmath.mpf("0.5772156649015328606065120900824024310422")


def ei_series_oracle(x):
    """Ei(x) summed with exact rationals until the term drops below 1e-18."""
    xq = Fraction(x)
    term, total, k = Fraction(1), Fraction(0), 0
    while True:
        k += 1
        term = term * xq / k
        total += term / k
        if k > abs(x) and abs(term / k) < Fraction(1, 10**18):
            break
    with mpmath.workdps(40):
        return float(EULER_GAMMA_40 + mpmath.log(abs(mpmath.mpf(x))) + mpmath.mpf(total.numerator) / total.denominator)


def off_cut_points(n, seed):
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        z = complex(rng.uniform(-15, 15), rng.uniform(-15, 15))
        if abs(z.imag) > 1e-3 and abs(z) > 1e-3:
            pts.append(z)
    return pts


class TestE1:
    def test_one_matches_quadrature(self):
        q = e1_quadrature_oracle(1.0)
        assert exp_integral_e1(1) == pytest.approx(0.219383934395520, abs=1e-14)
        assert abs(exp_integral_e1(1) - q) < 1e-12

    def test_on_cut_takes_upper_limit(self):
        v = exp_integral_e1(-1)
        assert v.real == pytest.approx(-ei_series_oracle(1), abs=1e-14)
        assert v.imag == pytest.approx(-math.pi, abs=1e-15)

    def test_negative_zero_imag_is_still_upper(self):
        assert exp_integral_e1(complex(-1, -0.0)) == exp_integral_e1(complex(-1, 0.0))

    def test_schwarz_reflection(self):
        w = 0.3 + 2j
        assert exp_integral_e1(w.conjugate()) == pytest.approx(exp_integral_e1(w).conjugate(), abs=1e-15)

    def test_quadrature_at_2_plus_3i(self):
        q = e1_quadrature_oracle(2 + 3j)
        assert abs(exp_integral_e1(2 + 3j) - q) < 1e-10
        # independent high-precision value
        assert abs(q - complex(-0.024826207944199363, 0.020316674911044623)) < 1e-14

    def test_real_bracketing(self):
        for z in (0.5, 2.0, 5.0, 12.0):
            v = exp_integral_e1(z).real
            assert math.exp(-z) / (z + 1) < v < math.exp(-z) / z
            assert math.exp(-z) / (z + 1) < e1_quadrature_oracle(z).real < math.exp(-z) / z

    @pytest.mark.parametrize("z", [0, 0j])
    def test_zero_is_a_pole(self, z):
        with pytest.raises(PoleError):
            exp_integral_e1(z)

    def test_overflow_flag(self):
        with pytest.raises(E1OverflowError):
            exp_integral_e1(-701 + 1j)

    def test_derivative_all_quadrants(self):
        pts = [cmath.rect(r, a) for r in (0.2, 1.0, 3.0, 7.0, 20.0)
               for a in (-2.5, -1.0, 0.4, 1.7, 2.8)]
        assert len(pts) >= 20
        for z in pts:
            h = 1e-5 * max(1.0, abs(z))
            fd = (exp_integral_e1(z + h) - exp_integral_e1(z - h)) / (2 * h)
            exact = -cmath.exp(-z) / z
            assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact)), z

    def test_series_and_continued_fraction_agree_near_crossover(self):
        rng = random.Random(42)
        for _ in range(500):
            z = cmath.rect(rng.uniform(0.8, 1.2) * E1_CROSSOVER, rng.uniform(-3, 3))
            a = specfun._e1_series(z, specfun.DEFAULT_CONTROL)
            b = specfun._e1_continued_fraction(z, specfun.DEFAULT_CONTROL)
            assert abs(a - b) <= 1e-12 * abs(b), z

    def test_conjugate_symmetry_random(self):
        for z in off_cut_points(100, 1):
            assert exp_integral_e1(z.conjugate()) == exp_integral_e1(z).conjugate()

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_cut_jump(self, x):
        jump = exp_integral_e1(complex(-x, 1e-8)) - exp_integral_e1(complex(-x, -1e-8))
        assert abs(jump - (-2j * math.pi)) < 1e-6

    def test_against_mpmath_wide(self):
        for z in off_cut_points(200, 2) + [30 + 5j, 100 - 1j, -40 + 0.5j, 1e-6 + 1e-6j]:
            ref = complex(mpmath.e1(z))
            assert abs(exp_integral_e1(z) - ref) <= 1e-12 * abs(ref), z

    def test_series_budget_exhausted(self):
        with pytest.raises(ConvergenceError):
            exp_integral_e1(-3.9, SeriesControl(max_terms=5))

    def test_series_control_validation(self):
        with pytest.raises(ValueError):
            SeriesControl(rel_tolerance=0)
        with pytest.raises(ValueError):
            SeriesControl(max_terms=0)


class TestEi:
    def test_one(self):
        assert exp_integral_ei(1) == pytest.approx(ei_series_oracle(1), abs=1e-15)
        assert exp_integral_ei(1) == pytest.approx(1.895117816355937, abs=1e-14)

    @pytest.mark.parametrize("t", [0.1, 1.0, 3.0, 10.0])
    def test_negative_argument(self, t):
        assert exp_integral_ei(-t) == -exp_integral_e1(t).real

    def test_log2_is_li2(self):
        assert exp_integral_ei(math.log(2)) == log_integral(2)

    @pytest.mark.parametrize("x", [1e-8, 0.3, 2.5, 9.2, 18.4, 40.0])
    def test_against_rational_series(self, x):
        assert exp_integral_ei(x) == pytest.approx(ei_series_oracle(x), rel=1e-14)

    def test_zero(self):
        with pytest.raises(PoleError):
            exp_integral_ei(0)


class TestLi:
    def test_two(self):
        assert log_integral(2) == pytest.approx(ei_series_oracle(math.log(2)), rel=1e-15)
        assert log_integral(2) == pytest.approx(1.045163780117492, abs=1e-14)

    @pytest.mark.parametrize("x", [10.0, 1e2, 1e4])
    def test_derivative_is_one_over_log(self, x):
        h = 1e-3 * x
        fd = (log_integral(x + h) - log_integral(x - h)) / (2 * h)
        assert abs(fd - 1 / math.log(x)) <= 1e-6 / math.log(x)

    def test_difference_matches_quadrature(self):
        from scipy.integrate import quad

        q, err = quad(lambda t: 1 / math.log(t), 1e4, 1e5, epsabs=0, epsrel=1e-13, limit=200)
        assert err < 1e-10
        assert abs((log_integral(1e5) - log_integral(1e4)) - q) < 1e-9

    def test_below_one(self):
        assert log_integral(0.5) == pytest.approx(float(mpmath.li(0.5)), rel=1e-14)

    @pytest.mark.parametrize("x", [0.0, -1.0, 1.0])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            log_integral(x)


class TestZeta:
    def test_basel(self):
        assert abs(riemann_zeta(2) - math.pi**2 / 6) <= 1e-13 * math.pi**2 / 6

    def test_self_consistency_under_doubling(self):
        s = 0.75 + 10j
        n = specfun._zeta_terms(10)
        base = riemann_zeta(s)
        ref = specfun._zeta_em(s, 2 * n, 14)
        assert abs(base - ref) <= 1e-11 * abs(ref)

    def test_stability_grid(self):
        for s in (2, 0.75 + 0.1j, 0.75 + 25j, 0.75 + 50j, 1.5 + 80j, 3 - 99j, 0.55 + 7j):
            s = complex(s)
            n = specfun._zeta_terms(abs(s.imag))
            a, b = specfun._zeta_em(s, n, 12), specfun._zeta_em(s, 2 * n, 14)
            assert abs(a - b) <= 1e-12 * abs(b), s

    def test_conjugate_symmetry(self):
        rng = random.Random(3)
        for _ in range(100):
            s = complex(rng.uniform(0.05, 5), rng.uniform(0.01, 100))
            assert riemann_zeta(s.conjugate()) == riemann_zeta(s).conjugate()

    def test_against_mpmath(self):
        rng = random.Random(4)
        for _ in range(100):
            s = complex(rng.uniform(0.05, 6), rng.uniform(-100, 100))
            ref = complex(mpmath.zeta(s))
            assert abs(riemann_zeta(s) - ref) <= 1e-12 * abs(ref), s

    def test_real_axis_value_is_real(self):
        assert riemann_zeta(0.75).imag == 0.0
        assert riemann_zeta(0.75).real < 0

    def test_pole_and_domain(self):
        with pytest.raises(PoleError):
            riemann_zeta(1)
        with pytest.raises(DomainError):
            riemann_zeta(-0.5 + 2j)

    def test_accuracy_warning_outside_calibration(self):
        with pytest.warns(specfun.ZetaAccuracyWarning):
            riemann_zeta(2 + 150j)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            riemann_zeta(2 + 99j)

    def test_bernoulli_numbers(self):
        b = specfun._bernoulli_even(12)
        assert b[0] == Fraction(1, 6)
        assert b[1] == Fraction(-1, 30)
        assert b[5] == Fraction(691, -2730)
        assert b[11] == Fraction(-236364091, 2730)


class TestQuadratureOracle:
    def test_requires_right_half_plane(self):
        with pytest.raises(DomainError):
            e1_quadrature_oracle(-1 + 1j)

    @settings(max_examples=25, deadline=None)
    @given(st.floats(0.05, 30), st.floats(-30, 30))
    def test_agrees_with_implementation(self, re, im):
        z = complex(re, im)
        q = e1_quadrature_oracle(z)
        assert abs(exp_integral_e1(z) - q) <= 1e-10 * abs(q)
