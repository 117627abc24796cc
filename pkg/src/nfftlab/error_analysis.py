"""Numerical estimation of the aliasing error constants.

For a window phi and bandwidth N, the quantity of interest is

    e(sigma, N) = max_{n in I_N} sup_x | sum_{r != 0}
                   phihat(n + r N1)/phihat(n) * exp(2 pi i r N1 x) |.

The series is truncated at |r| <= r_max (pairing +r with -r), the supremum
over one period [0, 1/N1) is taken on a uniform grid evaluated with a
single FFT per n, and a golden-section refinement recovers the peak between
grid points.  The truncated tail is controlled by a per-window envelope
bound and reported as ``tail_slack``, so estimate + tail_slack is always an
upper bound for the truncated-series supremum's true value.

By evenness of phihat, the scan over I_N is reduced to n in
{0, ..., N/2} u {-N/2}: |h_{-n}| and |h_n| share their supremum.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .nfft import fft
from .specialfn import bessel_i0, exp_int_e1, sinc
from .windows import PHI_FAMILY, Window, WindowKind, WindowParams

__all__ = [
    "EstimatorConfig",
    "ErrorConstantEstimate",
    "EstimatorError",
    "aliasing_function",
    "error_constant",
    "error_constant_rect_bracket",
    "RECT_BRACKET",
]

#: (lower, upper) bracket for the rectangular window's error constant.
RECT_BRACKET = (0.5 - 1.0 / math.pi, 0.5 + math.pi / 4.0)

_GOLDEN_ITERATIONS = 30


@dataclass(frozen=True)
class EstimatorConfig:
    r_max: int = 64
    x_grid: int = 2048
    refine: bool = True

    def __post_init__(self):
        if self.r_max < 8:
            raise ValueError("r_max must be at least 8")
        if self.x_grid < 256:
            raise ValueError("x_grid must be at least 256")
        if self.x_grid <= 2 * self.r_max:
            raise ValueError("x_grid must exceed 2*r_max")


DEFAULT_CONFIG = EstimatorConfig()


@dataclass(frozen=True)
class ErrorConstantEstimate:
    value: float
    n_argmax: int
    tail_slack: float
    config: EstimatorConfig


class EstimatorError(RuntimeError):
    pass


def _scan_indices(N):
    # n and -n give the same supremum, so only half of I_N is scanned;
    # n = N/2 stands in for -N/2 (phihat is even).
    return list(range(0, N // 2)) + [-N // 2]


def _coefficients(window, n, rs):
    """Truncated aliasing coefficients phihat(n + r N1)/phihat(n).

    The rectangular window uses the exact ratio n/(n + r N1): numerator and
    denominator share the factor sin(2 pi m n / N1), which may vanish, so
    cancelling it first keeps the coefficients finite at every n.
    """
    p = window.params
    if window.kind is WindowKind.RECT:
        if n == 0:
            return np.zeros(rs.size)
        return n / (n + rs.astype(float) * p.N1)
    denom = window.ft(float(n))
    if denom <= 0.0:
        raise EstimatorError(
            f"phihat({n}) = {denom} <= 0: {window.kind.value} window is not "
            f"admissible for m={p.m}, sigma={p.sigma}")
    return window.ft_grid(n + rs.astype(float) * p.N1) / denom


def aliasing_function(window, n, x, cfg=DEFAULT_CONFIG):
    """Truncated aliasing series at position x (1/N1-periodic in x)."""
    p = window.params
    if not -p.N // 2 <= n < p.N // 2:
        raise ValueError("n must lie in I_N")
    rs = np.concatenate([np.arange(-cfg.r_max, 0), np.arange(1, cfg.r_max + 1)])
    a = _coefficients(window, n, rs)
    total = 0.0 + 0.0j
    for r in range(1, cfg.r_max + 1):
        phase = cmath.exp(2j * math.pi * r * p.N1 * x)
        total += a[cfg.r_max - r] / phase + a[cfg.r_max + r - 1] * phase
    return total


def _grid_values(coeffs, rs, grid):
    """h_n on the uniform grid x_g = g/(grid*N1) via one inverse FFT."""
    spec = np.zeros(grid, dtype=complex)
    spec[np.mod(rs, grid)] = coeffs
    return np.conj(fft(np.conj(spec)))


def _refine_peak(coeffs, rs, g0, grid):
    """Golden-section maximization of |h_n| around grid cell g0."""
    gr = (math.sqrt(5.0) - 1.0) / 2.0

    def f(t):
        return abs(np.sum(coeffs * np.exp(2j * math.pi * rs * t)))

    lo, hi = (g0 - 1) / grid, (g0 + 1) / grid
    c = hi - gr * (hi - lo)
    d = lo + gr * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(_GOLDEN_ITERATIONS):
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - gr * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + gr * (hi - lo)
            fd = f(d)
    return max(fc, fd)


def error_constant(window, cfg=DEFAULT_CONFIG):
    """Estimate the error constant of a window at its configured (sigma, N).

    Returns the grid/refined maximum together with ``tail_slack``, an upper
    bound on whatever the |r| > r_max tail could add at any scanned n.
    """
    p = window.params
    rs = np.concatenate([np.arange(-cfg.r_max, 0), np.arange(1, cfg.r_max + 1)])
    best = -1.0
    best_n = 0
    slack = 0.0
    for n in _scan_indices(p.N):
        a = _coefficients(window, n, rs)
        values = _grid_values(a, rs, cfg.x_grid)
        mags = np.abs(values)
        g0 = int(np.argmax(mags))
        peak = float(mags[g0])
        if cfg.refine:
            peak = max(peak, _refine_peak(a, rs, g0, cfg.x_grid))
        if peak > best:
            best = peak
            best_n = n if n < p.N // 2 else -p.N // 2
        slack = max(slack, _tail_slack(window, n, cfg))
    return ErrorConstantEstimate(value=float(best), n_argmax=int(best_n),
                                 tail_slack=float(slack), config=cfg)


def error_constant_rect_bracket(params, cfg=DEFAULT_CONFIG):
    """Check the rectangular window's estimate against its known bracket.

    Asserts lower <= value + tail_slack and value - tail_slack <= upper
    (the truncated series converges slowly for this window, hence the slack
    enters on both sides) and returns the bracket endpoints.
    """
    est = error_constant(Window(WindowKind.RECT, params), cfg)
    low, high = RECT_BRACKET
    if est.value + est.tail_slack < low or est.value - est.tail_slack > high:
        raise EstimatorError(
            f"rect estimate {est.value} (slack {est.tail_slack}) falls "
            f"outside the bracket ({low}, {high})")
    return RECT_BRACKET


# -- truncation tails --------------------------------------------------------
#
# For a positive decreasing envelope f with f(-y) = f(y),
#     sum_{|r| > R} f(u + r) <= 2 f(T) + 2 int_T^inf f(t) dt,  T = R+1-|u|,
# which is evaluated in closed form for the envelope shapes that occur:
# y^-mu, (y^2-c^2)^(-3/4), exp(-a y), and (1/(a y)) exp(-sqrt(a y)).


def _tail_power(C, mu, T):
    return C * (2.0 * T ** -mu + 2.0 * T ** (1.0 - mu) / (mu - 1.0))


def _tail_power_shifted(C, T, c):
    # (y^2 - c^2)^(-3/4) <= h(T) * y^(-3/2) for y >= T
    hT = (1.0 - (c / T) ** 2) ** -0.75
    return _tail_power(C * hT, 1.5, T)


def _tail_exp(C, a, T):
    return C * (2.0 + 2.0 / a) * math.exp(-a * T)


def _tail_exp_sqrt(C, a, T):
    # envelope C * (1/(a y)) * exp(-sqrt(a y))
    root = math.sqrt(a * T)
    return C * (2.0 * math.exp(-root) / (a * T) + (4.0 / a) * exp_int_e1(root))


def _rho_tail(m, denom, beta, T):
    """Tail of the correction-term transform sum, from its contour bound."""
    R = 2.0 * m / denom
    a = 2.0 * math.pi * m
    t1 = _tail_power(R * (1.0 + 1.0 / math.e) * (beta / a) * (5.0 / a) ** 0.25,
                     1.25, T)
    t2 = _tail_exp_sqrt(2.0 * R, a, T)
    t3 = _tail_exp(R * (math.exp(-math.sqrt(2.0) * beta) + 0.5), a, T)
    return t1 + t2 + t3


def _rect_gap(params, n, cfg):
    """Grid maximum of |exact aliasing series - truncation| for rect.

    The full series has the closed form
        2 pi i (n/N1) (1 - e^{-2 pi i n/N1})^{-1} e^{-2 pi i n x} - 1
    on (0, 1/N1), converging to the midpoint of its one-sided limits at the
    period ends.  Returned in ratio units (already divided by phihat(n)).
    """
    if n == 0:
        return 0.0
    N1 = params.N1
    grid = cfg.x_grid
    rs = np.concatenate([np.arange(-cfg.r_max, 0), np.arange(1, cfg.r_max + 1)])
    trunc = _grid_values(n / (n + rs.astype(float) * N1), rs, grid)
    xs = np.arange(grid) / (grid * N1)
    c = (2j * math.pi * n / N1) / (1.0 - cmath.exp(-2j * math.pi * n / N1))
    full = c * np.exp(-2j * math.pi * n * xs) - 1.0
    # x = 0: Dirichlet midpoint of the limits from both period ends
    full[0] = 0.5 * (c + c * cmath.exp(-2j * math.pi * n / N1)) - 1.0
    return float(np.max(np.abs(full - trunc)))


def _tail_slack(window, n, cfg):
    """Upper bound on the |r| > r_max contribution to |h_n|, in ratio units."""
    p = window.params
    k = window.kind
    u = abs(n) / p.N1
    T = cfg.r_max + 1.0 - u
    c = 1.0 - 1.0 / (2.0 * p.sigma)
    if k is WindowKind.RECT:
        return _rect_gap(p, n, cfg)

    if k is WindowKind.SINH:
        num = _tail_power_shifted(
            c * math.sqrt(math.pi * p.m) / (math.sqrt(2.0) * math.sinh(p.beta)),
            T, c)
    elif k is WindowKind.CKB:
        # provable transform envelope b*beta/((I0(beta)-1) pi^2) * y^-2
        num = _tail_power(
            p.b * p.beta / ((bessel_i0(p.beta) - 1.0) * math.pi ** 2), 2.0, T)
    elif k is WindowKind.KB:
        i0b = bessel_i0(p.beta)
        ckb = _tail_power(p.b * p.beta / ((i0b - 1.0) * math.pi ** 2), 2.0, T)
        rect = _rect_gap(p, n, cfg) * abs(2.0 * p.m * sinc(
            2.0 * math.pi * p.m * n / p.N1))
        num = (1.0 - 1.0 / i0b) * ckb + rect / i0b
    elif k is WindowKind.CEXP:
        denom = math.expm1(p.beta)
        num = (_tail_power_shifted(
            p.beta / (denom * math.sqrt(2.0 * math.pi * p.m)), T, c)
            + _rho_tail(p.m, denom, p.beta, T))
    elif k is WindowKind.CCOSH:
        denom = math.cosh(p.beta) - 1.0
        num = (_tail_power_shifted(
            p.beta / (2.0 * denom * math.sqrt(2.0 * math.pi * p.m)), T, c)
            + _rho_tail(p.m, denom, p.beta, T))
    elif k is WindowKind.EXP:
        eb = math.exp(-p.beta)
        denom = math.expm1(p.beta)
        cexp = (_tail_power_shifted(
            p.beta / (denom * math.sqrt(2.0 * math.pi * p.m)), T, c)
            + _rho_tail(p.m, denom, p.beta, T))
        rect = _rect_gap(p, n, cfg) * abs(2.0 * p.m * sinc(
            2.0 * math.pi * p.m * n / p.N1))
        num = (1.0 - eb) * cexp + eb * rect
    else:
        raise AssertionError(k)

    # envelopes above are N1 * phihat; so is the denominator here
    return num / (p.N1 * window.ft(float(n)))
