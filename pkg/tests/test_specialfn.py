import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nfftlab.specialfn import bessel_i0, bessel_i1, bessel_j1, exp_int_e1, sinc

import oracles

X0 = 4.0 * math.pi / math.sqrt(5.0)


class TestBesselI0:
    def test_at_zero(self):
        assert bessel_i0(0.0) == 1.0

    def test_frozen_series_value(self):
        assert bessel_i0(3.0 * math.pi) == pytest.approx(
            oracles.FROZEN_I0_3PI, rel=1e-13)

    def test_even(self):
        assert bessel_i0(-2.5) == bessel_i0(2.5)

    def test_overflow_signalled(self):
        with pytest.raises(OverflowError):
            bessel_i0(800.0)

    def test_monotone_and_at_least_one(self):
        xs = np.linspace(0.0, 40.0, 200)
        vals = bessel_i0(xs)
        assert np.all(vals >= 1.0)
        assert np.all(np.diff(vals) > 0)


class TestBesselI1:
    def test_at_zero(self):
        assert bessel_i1(0.0) == 0.0

    def test_frozen_series_value(self):
        assert bessel_i1(1.0) == pytest.approx(oracles.FROZEN_I1_1, rel=1e-13)

    def test_odd(self):
        assert bessel_i1(-3.3) == -bessel_i1(3.3)

    def test_exponential_lower_bound_at_x0(self):
        # I1(x) >= C x^{-1/2} e^x from x0 = 4 pi / sqrt(5) onward, with
        # C = sqrt(x0) e^{-x0} I1(x0) = 0.370513 the largest constant the
        # monotone comparison yields.  (sqrt(x) e^{-x} I1(x) increases to
        # 1/sqrt(2 pi) = 0.3989, so no constant as large as 2/5 can work.)
        C = 0.37051296656262625
        for x in [X0, 9.0, 12.0, 20.0, 35.0]:
            assert bessel_i1(x) >= C * x ** -0.5 * math.exp(x) * (1 - 1e-13)

    def test_scaled_monotone_comparison(self):
        # sqrt(2 pi x) e^-x I1(x) is increasing from x0 on
        xs = np.linspace(X0, 40.0, 300)
        scaled = np.sqrt(2.0 * np.pi * xs) * np.exp(-xs) * bessel_i1(xs)
        assert np.all(np.diff(scaled) > 0)


class TestBesselJ1:
    def test_at_zero(self):
        assert bessel_j1(0.0) == 0.0

    def test_frozen_poisson_value(self):
        assert bessel_j1(2.0) == pytest.approx(oracles.FROZEN_J1_2, rel=1e-12)

    def test_odd(self):
        assert bessel_j1(-5.0) == -bessel_j1(5.0)

    def test_inverse_sqrt_bound_from_six(self):
        assert abs(bessel_j1(6.0)) <= 1.0 / math.sqrt(6.0)
        xs = np.linspace(6.0, 100.0, 500)
        assert np.all(np.abs(bessel_j1(xs)) <= 1.0 / np.sqrt(xs))

    def test_half_x_bound(self):
        xs = np.linspace(0.0, 100.0, 400)
        assert np.all(np.abs(bessel_j1(xs)) <= xs / 2.0 + 1e-300)

    def test_series_quadrature_seam(self):
        # both branches agree with the oracle around the 6.0 cutoff
        for x in [5.9, 5.999, 6.0, 6.001, 6.5]:
            assert bessel_j1(x) == pytest.approx(
                oracles.j1_poisson_oracle(x), abs=1e-13)


class TestExpIntE1:
    def test_frozen_quadrature_value(self):
        assert exp_int_e1(1.0) == pytest.approx(oracles.FROZEN_E1_1, rel=1e-12)

    def test_integrand_bound(self):
        assert exp_int_e1(10.0) < math.exp(-10.0) / 10.0

    def test_strictly_decreasing(self):
        assert exp_int_e1(2.0) > exp_int_e1(3.0)
        xs = np.linspace(0.05, 20.0, 300)
        assert np.all(np.diff(exp_int_e1(xs)) < 0)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            exp_int_e1(0.0)
        with pytest.raises(ValueError):
            exp_int_e1(-1.0)

    def test_series_cf_seam(self):
        for x in [0.9, 0.999, 1.0, 1.001, 1.5]:
            assert exp_int_e1(x) == pytest.approx(
                oracles.e1_quadrature_oracle(x), rel=1e-13)


class TestSinc:
    def test_removable_singularity(self):
        assert sinc(0.0) == 1.0

    def test_zero_at_pi(self):
        assert abs(sinc(math.pi)) < 1e-15

    def test_taylor_branch(self):
        x = 1e-6
        assert sinc(x) == pytest.approx(1.0 - x * x / 6.0, rel=1e-15)

    @given(st.floats(-50.0, 50.0))
    def test_even_and_bounded(self, x):
        assert sinc(-x) == sinc(x)
        assert abs(sinc(x)) <= 1.0

    def test_branch_seam(self):
        for x in [9.9e-5, 1e-4, 1.01e-4]:
            assert sinc(x) == pytest.approx(oracles.sinc_oracle(x), rel=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 30.0))
def test_i0_matches_oracle_everywhere(x):
    assert bessel_i0(x) == pytest.approx(oracles.i0_series_oracle(x), rel=1e-13)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 30.0))
def test_i1_matches_oracle_everywhere(x):
    assert bessel_i1(x) == pytest.approx(oracles.i1_series_oracle(x), rel=1e-13)


def test_sampled_oracle_agreement():
    # scaled-down version of the acceptance sweep (criterion 10 runs 1000)
    xs = np.logspace(-3, math.log10(35.0), 60)
    for x in xs:
        assert bessel_i0(x) == pytest.approx(oracles.i0_series_oracle(x), rel=1e-12)
        assert bessel_i1(x) == pytest.approx(oracles.i1_series_oracle(x), rel=1e-12)
        assert exp_int_e1(x) == pytest.approx(oracles.e1_quadrature_oracle(x), rel=1e-12)
    for x in np.logspace(-3, 2, 60):
        ref = oracles.j1_poisson_oracle(x)
        assert bessel_j1(x) == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_array_inputs_match_scalars():
    # j1's quadrature mesh depends on the batch maximum, so agreement is to
    # rule accuracy rather than bitwise
    xs = np.array([0.3, 1.7, 8.0, 19.5])
    for fn in (bessel_i0, bessel_i1, bessel_j1, exp_int_e1, sinc):
        batch = fn(xs)
        singles = np.array([fn(float(x)) for x in xs])
        np.testing.assert_allclose(batch, singles, rtol=1e-13, atol=1e-14)


def test_nonfinite_rejected():
    for fn in (bessel_i0, bessel_i1, bessel_j1, sinc):
        with pytest.raises(ValueError):
            fn(float("nan"))
        with pytest.raises(ValueError):
            fn(float("inf"))
