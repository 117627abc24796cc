"""The seven compactly supported window functions and their transforms.

Every window lives on [-m/N1, m/N1] with shape parameter beta = b*m,
b = 2*pi*(1 - 1/(2*sigma)).  Four of them (ckb, sinh, cexp, ccosh) are
continuous and vanish at the support endpoints; rect, kb and exp carry a
jump there and take the midpoint value at x = +-m/N1.

Transforms are expressed through the scaled frequency w = 2*pi*m*v/N1.
The analytic branches switch at |w| = beta; both the I1/J1 pair and the
sinh/sin pair are evaluated through a single even kernel of z = beta^2-w^2
with a power-series branch near z = 0, so the transforms are continuous
across the branch point.  The exp-type and cosh-type windows have no
closed-form transform and integrate (2m/N1) * int_0^1 phi(mt/N1) cos(wt) dt
numerically, or split the window into an analytic sinh-like part psi plus a
small correction rho.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import quadrature
from .specialfn import bessel_i0, bessel_i1, bessel_j1, sinc

__all__ = [
    "WindowKind",
    "FtStrategy",
    "WindowParams",
    "Window",
    "make_window",
    "contour_integral_I",
]


class WindowKind(str, Enum):
    RECT = "rect"
    CKB = "ckb"
    KB = "kb"
    SINH = "sinh"
    CEXP = "cexp"
    EXP = "exp"
    CCOSH = "ccosh"


#: Continuous members of the admissible window family (positive transform on
#: [-N/2, N/2], continuous, decreasing on [0, m/N1]).
PHI_FAMILY = frozenset({WindowKind.CKB, WindowKind.SINH, WindowKind.CEXP,
                        WindowKind.CCOSH})


class FtStrategy(str, Enum):
    ANALYTIC = "analytic"
    QUADRATURE = "quadrature"
    SPLIT = "split"
    COMPOSITE = "composite"


_DEFAULT_STRATEGY = {
    WindowKind.RECT: FtStrategy.ANALYTIC,
    WindowKind.CKB: FtStrategy.ANALYTIC,
    WindowKind.KB: FtStrategy.ANALYTIC,
    WindowKind.SINH: FtStrategy.ANALYTIC,
    WindowKind.CEXP: FtStrategy.QUADRATURE,
    WindowKind.CCOSH: FtStrategy.QUADRATURE,
    WindowKind.EXP: FtStrategy.COMPOSITE,
}


@dataclass(frozen=True)
class WindowParams:
    """Truncation parameter m, oversampling sigma, bandwidth N and friends.

    N1 = sigma*N must come out as an even integer; b, beta and the support
    half-width m/N1 are derived.
    """

    m: int
    sigma: float
    N: int
    N1: int = field(init=False)
    b: float = field(init=False)
    beta: float = field(init=False)
    support_half_width: float = field(init=False)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if self.sigma < 1.25:
            raise ValueError("sigma must be at least 5/4")
        if self.N < 8 or self.N % 2:
            raise ValueError("N must be an even integer >= 8")
        n1 = self.sigma * self.N
        if abs(n1 - round(n1)) > 1e-9 or round(n1) % 2:
            raise ValueError("sigma*N must be an even integer")
        n1 = int(round(n1))
        if 2 * self.m > n1 // 4:
            raise ValueError("2m must not exceed N1/4")
        b = 2.0 * math.pi * (1.0 - 1.0 / (2.0 * self.sigma))
        object.__setattr__(self, "N1", n1)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "beta", b * self.m)
        object.__setattr__(self, "support_half_width", self.m / n1)


def _bessel_ratio_kernel(z):
    """I1(sqrt(z))/sqrt(z) for z > 0, J1(sqrt(-z))/sqrt(-z) for z < 0.

    Entire in z; equals 1/2 at z = 0.  Near the branch point both Bessel
    routes lose accuracy, so |z| < 1e-6 switches to the defining power
    series (1/2) * sum_k (z/4)^k / (k! (k+1)!).
    """
    z = np.atleast_1d(np.asarray(z, dtype=float))
    out = np.empty_like(z)
    pos = z > 1e-6
    neg = z < -1e-6
    mid = ~(pos | neg)
    if pos.any():
        r = np.sqrt(z[pos])
        out[pos] = bessel_i1(r) / r
    if neg.any():
        r = np.sqrt(-z[neg])
        out[neg] = bessel_j1(r) / r
    if mid.any():
        zm = z[mid]
        term = np.ones_like(zm)
        total = np.ones_like(zm)
        for k in range(1, 12):
            term = term * (zm / 4.0) / (k * (k + 1))
            total = total + term
            if np.all(np.abs(term) < 1e-16):
                break
        out[mid] = 0.5 * total
    return out


def _sinhc_kernel(z):
    """sinh(sqrt(z))/sqrt(z) for z > 0, sinc(sqrt(-z)) for z < 0; 1 at 0."""
    z = np.atleast_1d(np.asarray(z, dtype=float))
    out = np.empty_like(z)
    pos = z > 1e-6
    neg = z < -1e-6
    mid = ~(pos | neg)
    if pos.any():
        r = np.sqrt(z[pos])
        out[pos] = np.sinh(r) / r
    if neg.any():
        r = np.sqrt(-z[neg])
        out[neg] = np.sin(r) / r
    if mid.any():
        zm = z[mid]
        term = np.ones_like(zm)
        total = np.ones_like(zm)
        for k in range(1, 12):
            term = term * zm / ((2 * k) * (2 * k + 1))
            total = total + term
            if np.all(np.abs(term) < 1e-16):
                break
        out[mid] = total
    return out


# Transform values are pure functions of (kind, strategy, m, sigma, N1, |v|),
# so the memo is shared process-wide; entries are recomputable, making a
# concurrent duplicate computation harmless.
_FT_MEMO = {}


class Window:
    """A window function plus the machinery to evaluate its transform.

    Instances are immutable; evaluated transform values are memoized in a
    shared cache keyed by the window's defining parameters.
    """

    def __init__(self, kind, params, ft_strategy=None):
        kind = WindowKind(kind)
        strategy = FtStrategy(ft_strategy) if ft_strategy else _DEFAULT_STRATEGY[kind]
        if kind in (WindowKind.RECT, WindowKind.CKB, WindowKind.KB, WindowKind.SINH):
            if strategy is not FtStrategy.ANALYTIC:
                raise ValueError(f"{kind.value} has an analytic transform only")
        elif kind is WindowKind.EXP:
            if strategy is not FtStrategy.COMPOSITE:
                raise ValueError("exp window is evaluated by composition")
        elif strategy not in (FtStrategy.QUADRATURE, FtStrategy.SPLIT):
            raise ValueError(f"{kind.value} needs quadrature or split strategy")
        self.kind = kind
        self.params = params
        self.ft_strategy = strategy
        key = (kind, strategy, params.m, params.sigma, params.N1)
        self._ft_cache = _FT_MEMO.setdefault(key, {})
        # exp is handled as (1 - e^-beta) * cexp + e^-beta * rect
        self._cexp = (Window(WindowKind.CEXP, params) if kind is WindowKind.EXP
                      else None)

    def __repr__(self):
        p = self.params
        return (f"Window({self.kind.value}, m={p.m}, sigma={p.sigma}, "
                f"N={p.N}, ft={self.ft_strategy.value})")

    # -- values ------------------------------------------------------------

    def value(self, x):
        """phi(x), including the midpoint convention of the jump windows."""
        p = self.params
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(xa)
        hw = p.support_half_width
        inside = np.abs(xa) < hw
        edge = np.abs(xa) == hw
        if inside.any():
            s = np.sqrt(1.0 - (p.N1 * xa[inside] / p.m) ** 2)
            out[inside] = self._profile(s)
        if edge.any():
            out[edge] = self._edge_value()
        return float(out[0]) if np.isscalar(x) or np.ndim(x) == 0 else out

    def _profile(self, s):
        """Window profile as a function of s = sqrt(1 - (N1 x / m)^2)."""
        beta = self.params.beta
        k = self.kind
        if k is WindowKind.RECT:
            return np.ones_like(s)
        if k is WindowKind.CKB:
            return (bessel_i0(beta * s) - 1.0) / (bessel_i0(beta) - 1.0)
        if k is WindowKind.KB:
            return bessel_i0(beta * s) / bessel_i0(beta)
        if k is WindowKind.SINH:
            return np.sinh(beta * s) / math.sinh(beta)
        if k is WindowKind.CEXP:
            return np.expm1(beta * s) / math.expm1(beta)
        if k is WindowKind.EXP:
            return np.exp(beta * (s - 1.0))
        if k is WindowKind.CCOSH:
            return (np.cosh(beta * s) - 1.0) / (math.cosh(beta) - 1.0)
        raise AssertionError(k)

    def _edge_value(self):
        beta = self.params.beta
        if self.kind is WindowKind.RECT:
            return 0.5
        if self.kind is WindowKind.KB:
            return 0.5 / bessel_i0(beta)
        if self.kind is WindowKind.EXP:
            return 0.5 * math.exp(-beta)
        return 0.0

    def psi(self, x):
        """Analytic sinh-like part of the cexp/ccosh split."""
        self._require_split_kind()
        p = self.params
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(xa)
        inside = np.abs(xa) < p.support_half_width
        s = np.sqrt(np.clip(1.0 - (p.N1 * xa[inside] / p.m) ** 2, 0.0, None))
        if self.kind is WindowKind.CEXP:
            out[inside] = 2.0 * np.sinh(p.beta * s) / math.expm1(p.beta)
        else:
            out[inside] = np.sinh(p.beta * s) / (math.cosh(p.beta) - 1.0)
        return float(out[0]) if np.isscalar(x) or np.ndim(x) == 0 else out

    def rho(self, x):
        """Small correction term: phi = psi + rho pointwise."""
        self._require_split_kind()
        p = self.params
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(xa)
        inside = np.abs(xa) < p.support_half_width
        s = np.sqrt(np.clip(1.0 - (p.N1 * xa[inside] / p.m) ** 2, 0.0, None))
        out[inside] = np.expm1(-p.beta * s) / self._rho_denom()
        return float(out[0]) if np.isscalar(x) or np.ndim(x) == 0 else out

    def rho_bound(self):
        """sup |rho| = -rho(0): exp(-beta) for cexp, 2/(e^beta - 1) for ccosh."""
        self._require_split_kind()
        beta = self.params.beta
        if self.kind is WindowKind.CEXP:
            return math.exp(-beta)
        return 2.0 / math.expm1(beta)

    def _rho_denom(self):
        return (math.expm1(self.params.beta) if self.kind is WindowKind.CEXP
                else math.cosh(self.params.beta) - 1.0)

    def _require_split_kind(self):
        if self.kind not in (WindowKind.CEXP, WindowKind.CCOSH):
            raise ValueError("psi/rho split exists for cexp and ccosh only")

    # -- transforms ----------------------------------------------------------

    def ft(self, v):
        """Fourier transform phihat(v); even and real."""
        return float(self.ft_grid(np.array([float(v)]))[0])

    def ft_grid(self, vs):
        """Vectorized phihat over an array of frequencies, with caching.

        The transform is even, so values are cached by |v|.
        """
        vs = np.atleast_1d(np.asarray(vs, dtype=float))
        keys = [abs(float(v)) for v in vs.ravel()]
        missing = sorted({k for k in keys if k not in self._ft_cache})
        if missing:
            vals = self._ft_uncached(np.array(missing))
            self._ft_cache.update(zip(missing, (float(v) for v in vals)))
        return np.array([self._ft_cache[k] for k in keys]).reshape(vs.shape)

    def _ft_uncached(self, vs):
        p = self.params
        w = 2.0 * math.pi * p.m * vs / p.N1
        z = p.beta ** 2 - w ** 2
        k = self.kind
        if k is WindowKind.RECT:
            return (2.0 * p.m / p.N1) * sinc(w)
        if k is WindowKind.KB:
            return (2.0 * p.m / (bessel_i0(p.beta) * p.N1)) * _sinhc_kernel(z)
        if k is WindowKind.CKB:
            return (2.0 * p.m / ((bessel_i0(p.beta) - 1.0) * p.N1)) * (
                _sinhc_kernel(z) - sinc(w))
        if k is WindowKind.SINH:
            return (math.pi * p.m * p.beta / (p.N1 * math.sinh(p.beta))
                    ) * _bessel_ratio_kernel(z)
        if k is WindowKind.EXP:
            eb = math.exp(-p.beta)
            rect = (2.0 * p.m / p.N1) * sinc(w)
            return (1.0 - eb) * self._cexp.ft_grid(vs) + eb * rect
        if self.ft_strategy is FtStrategy.SPLIT:
            return self.psi_ft_grid(vs) + self.rho_ft_grid(vs)
        profile = self._profile
        transform = quadrature.cosine_transform_batch(
            lambda t: profile(np.sqrt(1.0 - t * t)), w, beta_scale=p.beta)
        return (2.0 * p.m / p.N1) * transform

    def psi_ft(self, v):
        return float(self.psi_ft_grid(np.array([float(v)]))[0])

    def psi_ft_grid(self, vs):
        """Transform of the sinh-like part; I1/J1 branches with the exact
        continuity value at the branch point |v| = N1*(1 - 1/(2*sigma))."""
        self._require_split_kind()
        p = self.params
        vs = np.atleast_1d(np.asarray(vs, dtype=float))
        w = 2.0 * math.pi * p.m * vs / p.N1
        z = p.beta ** 2 - w ** 2
        if self.kind is WindowKind.CEXP:
            pref = 2.0 * math.pi * p.m * p.beta / (math.expm1(p.beta) * p.N1)
        else:
            pref = (math.pi * p.m * p.beta
                    / ((math.cosh(p.beta) - 1.0) * p.N1))
        return pref * _bessel_ratio_kernel(z)

    def rho_ft(self, v):
        return float(self.rho_ft_grid(np.array([float(v)]))[0])

    def rho_ft_grid(self, vs):
        self._require_split_kind()
        p = self.params
        vs = np.atleast_1d(np.asarray(vs, dtype=float))
        w = 2.0 * math.pi * p.m * vs / p.N1
        transform = quadrature.cosine_transform_batch(
            lambda t: np.expm1(-p.beta * np.sqrt(1.0 - t * t)), w,
            beta_scale=p.beta)
        return (2.0 * p.m / (self._rho_denom() * p.N1)) * transform


def make_window(kind, m, sigma, N, ft_strategy=None):
    """Convenience constructor: kind tag plus raw (m, sigma, N)."""
    return Window(WindowKind(kind), WindowParams(m=m, sigma=sigma, N=N),
                  ft_strategy)


def contour_integral_I(params, w, cfg=quadrature.DEFAULT_CONFIG):
    """I(w) = int_{-1}^{1} (exp(-beta sqrt(1-t^2)) - 1) e^{i w t} dt.

    Validation helper for the contour-integral bound on the rho correction;
    the imaginary part is integrated literally (not assumed zero) so tests
    can confirm it vanishes by symmetry.
    """
    beta = params.beta
    w = float(w)

    def g(t):
        return np.expm1(-beta * np.sqrt(np.clip(1.0 - t * t, 0.0, None)))

    re, _ = quadrature.integrate(lambda t: g(t) * np.cos(w * t), -1.0, 1.0, cfg)
    im, _ = quadrature.integrate(lambda t: g(t) * np.sin(w * t), -1.0, 1.0, cfg)
    return complex(re, im)
