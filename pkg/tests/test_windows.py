import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nfftlab.bounds import gamma_const, min_ft_bound
from nfftlab.quadrature import integrate
from nfftlab.specialfn import bessel_i0
from nfftlab.windows import (PHI_FAMILY, FtStrategy, Window, WindowKind,
                             WindowParams, contour_integral_I, make_window)

import oracles

ALL_KINDS = [k.value for k in WindowKind]
CONTINUOUS = ["ckb", "sinh", "cexp", "ccosh"]


@pytest.fixture(scope="module")
def params():
    return WindowParams(m=3, sigma=2.0, N=64)


class TestWindowParams:
    def test_derived_quantities(self, params):
        assert params.N1 == 128
        assert params.b == pytest.approx(2.0 * math.pi * 0.75, rel=1e-16)
        assert params.beta == pytest.approx(params.b * 3, rel=1e-16)
        assert params.support_half_width == 3 / 128

    def test_beta_definition_alternate_form(self, params):
        # beta = pi m (2 - 1/sigma)
        assert params.beta == pytest.approx(
            math.pi * params.m * (2.0 - 1.0 / params.sigma), rel=1e-15)

    @pytest.mark.parametrize("kwargs", [
        dict(m=1, sigma=2.0, N=64),
        dict(m=3, sigma=1.2, N=64),
        dict(m=3, sigma=2.0, N=63),
        dict(m=3, sigma=2.0, N=6),
        dict(m=3, sigma=1.26, N=64),   # sigma*N not an integer
        dict(m=9, sigma=2.0, N=32),    # 2m > N1/4
    ])
    def test_invalid_parameters_rejected(self, kwargs):
        with pytest.raises(ValueError):
            WindowParams(**kwargs)

    def test_odd_product_rejected(self):
        # sigma*N an odd integer must be rejected too
        with pytest.raises(ValueError):
            WindowParams(m=2, sigma=1.328125, N=64)   # 85


class TestValues:
    def test_midpoint_conventions(self, params):
        hw = params.support_half_width
        assert make_window("rect", 3, 2.0, 64).value(hw) == 0.5
        assert make_window("kb", 3, 2.0, 64).value(-hw) == pytest.approx(
            0.5 / bessel_i0(params.beta), rel=1e-15)
        assert make_window("exp", 3, 2.0, 64).value(hw) == pytest.approx(
            0.5 * math.exp(-params.beta), rel=1e-15)
        for kind in CONTINUOUS:
            assert make_window(kind, 3, 2.0, 64).value(hw) == 0.0

    def test_normalized_at_zero(self):
        for kind in CONTINUOUS + ["kb", "exp", "rect"]:
            assert make_window(kind, 3, 2.0, 64).value(0.0) == pytest.approx(
                1.0, rel=1e-15)

    def test_zero_outside_support(self, params):
        for kind in ALL_KINDS:
            w = make_window(kind, 3, 2.0, 64)
            assert w.value(params.support_half_width * 1.0001) == 0.0
            assert w.value(0.49) == 0.0

    @settings(max_examples=30, deadline=None)
    @given(st.floats(-0.03, 0.03))
    def test_even(self, x):
        for kind in ALL_KINDS:
            w = make_window(kind, 3, 2.0, 64)
            assert w.value(-x) == w.value(x)

    def test_decreasing_on_support(self):
        xs = np.linspace(0.0, 3 / 128, 200)
        for kind in CONTINUOUS:
            vals = make_window(kind, 3, 2.0, 64).value(xs)
            assert np.all(np.diff(vals) < 0)

    def test_range_zero_one(self):
        xs = np.linspace(-0.5, 0.4999, 701)
        for kind in ALL_KINDS:
            vals = make_window(kind, 3, 2.0, 64).value(xs)
            assert np.all(vals >= 0.0) and np.all(vals <= 1.0)


class TestSplit:
    @pytest.mark.parametrize("kind", ["cexp", "ccosh"])
    def test_psi_plus_rho_identity(self, kind):
        w = make_window(kind, 3, 2.0, 64)
        xs = np.linspace(-0.03, 0.03, 1000)
        np.testing.assert_allclose(w.psi(xs) + w.rho(xs), w.value(xs),
                                   rtol=0, atol=1e-14)

    def test_rho_range_cexp(self):
        w = make_window("cexp", 3, 2.0, 64)
        xs = np.linspace(-0.03, 0.03, 1000)
        r = w.rho(xs)
        assert np.all(r <= 0.0)
        assert np.all(r >= -math.exp(-w.params.beta) - 1e-18)
        assert w.rho(0.0) == pytest.approx(-math.exp(-w.params.beta), rel=1e-12)

    def test_rho_bound_values(self):
        # published sup|rho| values at sigma = 2 (three significant digits)
        assert make_window("cexp", 2, 2.0, 64).rho_bound() == pytest.approx(
            8.06e-5, rel=5e-3)
        assert make_window("cexp", 4, 2.0, 64).rho_bound() == pytest.approx(
            6.51e-9, rel=5e-3)
        w = make_window("ccosh", 2, 2.0, 64)
        assert w.rho_bound() == pytest.approx(
            2.0 / (math.exp(3.0 * math.pi) - 1.0), rel=1e-15)
        assert w.rho(0.0) == pytest.approx(-w.rho_bound(), rel=1e-12)

    def test_split_reserved_for_cexp_ccosh(self):
        with pytest.raises(ValueError):
            make_window("sinh", 3, 2.0, 64).psi(0.0)
        with pytest.raises(ValueError):
            make_window("kb", 3, 2.0, 64).rho_bound()


class TestTransforms:
    def test_rect_at_zero(self, params):
        w = make_window("rect", 3, 2.0, 64)
        assert w.ft(0.0) == pytest.approx(2.0 * 3 / 128, rel=1e-15)

    def test_sinh_branch_point_value(self):
        # continuity across |w| = beta forces pi*m*beta/(2*N1*sinh(beta));
        # cross-checked against the defining integral below
        w = make_window("sinh", 2, 2.0, 64)
        p = w.params
        v_branch = p.N1 * (1.0 - 1.0 / (2.0 * p.sigma))
        expected = math.pi * p.m * p.beta / (2.0 * p.N1 * math.sinh(p.beta))
        assert w.ft(v_branch) == pytest.approx(expected, rel=1e-12)
        assert w.ft(v_branch) == pytest.approx(
            oracles.window_ft_oracle(w, v_branch), rel=1e-9)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_against_defining_integral(self, kind):
        w = make_window(kind, 2, 2.0, 64)
        p = w.params
        for v in [0.0, 3.0, p.N / 2, 71.3, p.N1 * (1 - 1 / (2 * p.sigma)), 150.0]:
            ref = oracles.window_ft_oracle(w, v)
            assert w.ft(float(v)) == pytest.approx(ref, abs=3e-11), (kind, v)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_ft_even(self, kind):
        w = make_window(kind, 3, 2.0, 64)
        for v in [0.7, 12.0, 37.3]:
            assert w.ft(-v) == w.ft(v)

    def test_monotone_decay_on_half_band(self):
        for kind in CONTINUOUS:
            w = make_window(kind, 3, 2.0, 64)
            vals = w.ft_grid(np.linspace(0.0, 32.0, 65))
            assert np.all(vals > 0.0)
            assert np.all(np.diff(vals) < 0)

    def test_composition_exp(self):
        # phihat_exp = (1 - e^-beta) phihat_cexp + e^-beta phihat_rect
        wexp = make_window("exp", 3, 2.0, 64)
        wcexp = make_window("cexp", 3, 2.0, 64)
        wrect = make_window("rect", 3, 2.0, 64)
        eb = math.exp(-wexp.params.beta)
        for v in [0.0, 5.0, 32.0, 100.0, 321.5]:
            expected = (1 - eb) * wcexp.ft(v) + eb * wrect.ft(v)
            assert wexp.ft(v) == pytest.approx(expected, rel=1e-12, abs=1e-18)

    def test_quadrature_vs_split_strategy(self):
        wq = make_window("cexp", 4, 2.0, 64)
        ws = Window(WindowKind.CEXP, wq.params, FtStrategy.SPLIT)
        assert wq.ft_strategy is FtStrategy.QUADRATURE
        v = float(wq.params.N // 2)
        assert abs(wq.ft(v) - ws.ft(v)) < 1e-10
        vs = np.linspace(0.0, 300.0, 40)
        np.testing.assert_allclose(wq.ft_grid(vs), ws.ft_grid(vs),
                                   rtol=0, atol=1e-10)

    def test_psi_ft_boundary_value(self):
        # twice the published boundary display, as continuity (and the
        # defining integral) demand
        w = make_window("cexp", 3, 2.0, 64)
        p = w.params
        v_branch = p.N1 * (1.0 - 1.0 / (2.0 * p.sigma))
        expected = math.pi * p.m * p.beta / (math.expm1(p.beta) * p.N1)
        assert w.psi_ft(v_branch) == pytest.approx(expected, rel=1e-12)

    def test_psi_ft_at_zero_against_quadrature(self):
        w = make_window("cexp", 3, 2.0, 64)
        p = w.params
        ref, _ = integrate(
            lambda t: np.sinh(p.beta * np.sqrt(np.clip(1 - t * t, 0, None))),
            0.0, 1.0)
        expected = 2.0 * (2.0 * p.m / (math.expm1(p.beta) * p.N1)) * ref
        assert w.psi_ft(0.0) == pytest.approx(expected, rel=1e-11)

    def test_psi_ft_even(self):
        w = make_window("ccosh", 3, 2.0, 64)
        assert w.psi_ft(37.3) == w.psi_ft(-37.3)

    def test_ccosh_psi_scaling_vs_cexp(self):
        # psi1-hat = psihat * (e^beta - 1)/(2 (cosh beta - 1))
        wc = make_window("cexp", 3, 2.0, 64)
        wh = make_window("ccosh", 3, 2.0, 64)
        beta = wc.params.beta
        scale = math.expm1(beta) / (2.0 * (math.cosh(beta) - 1.0))
        for v in [0.0, 11.0, 40.0]:
            assert wh.psi_ft(v) == pytest.approx(wc.psi_ft(v) * scale, rel=1e-13)

    def test_strategy_validation(self):
        with pytest.raises(ValueError):
            make_window("sinh", 3, 2.0, 64, ft_strategy="quadrature")
        with pytest.raises(ValueError):
            make_window("exp", 3, 2.0, 64, ft_strategy="split")
        with pytest.raises(ValueError):
            make_window("cexp", 3, 2.0, 64, ft_strategy="analytic")


class TestMinFtBounds:
    @pytest.mark.parametrize("kind", ["ckb", "sinh", "cexp", "ccosh"])
    def test_corrected_lower_bound_dominated(self, kind):
        for m, sigma in [(2, 1.25), (3, 2.0), (5, 1.5)]:
            w = make_window(kind, m, sigma, 128)
            exact = w.ft(float(w.params.N // 2))
            bound = min_ft_bound(kind, w.params, corrected=True)
            assert bound <= exact * (1 + 1e-12), (kind, m, sigma)

    def test_published_sinh_bound_overshoots(self):
        # the printed 2/5-based bound sits above the true minimum: kept as a
        # regression witness of the constant defect
        w = make_window("sinh", 2, 2.0, 128)
        exact = w.ft(float(w.params.N // 2))
        assert min_ft_bound("sinh", w.params, corrected=False) > exact

    def test_ckb_published_bound_is_valid(self):
        for m, sigma in [(2, 1.25), (3, 2.0), (6, 2.0)]:
            w = make_window("ckb", m, sigma, 128)
            exact = w.ft(float(w.params.N // 2))
            assert min_ft_bound("ckb", w.params) <= exact


class TestContourIntegral:
    def test_value_at_zero_frequency(self, params):
        val = contour_integral_I(params, 0.0)
        gamma = gamma_const(params)
        assert val.real == pytest.approx(2.0 * gamma - 2.0, rel=1e-10)
        assert abs(val.imag) < 1e-12

    def test_imaginary_part_vanishes(self, params):
        assert abs(contour_integral_I(params, 17.2).imag) < 1e-12

    def test_magnitude_against_contour_bound(self):
        p = WindowParams(m=2, sigma=1.25, N=64)
        beta = p.beta
        val = contour_integral_I(p, beta)
        rhs = ((2 + 2 / math.e) * beta * 5 ** 0.25 * beta ** -1.25
               + 4 / beta * math.exp(-math.sqrt(beta))
               + (2 * math.exp(-math.sqrt(2) * beta) + 1) * math.exp(-beta))
        assert abs(val) <= rhs
