"""Nonequispaced FFT: exact NDFT oracle, oversampled FFT, windowed spreading.

Conventions
-----------
Spectral coefficients are a complex array of length N indexed by
k = position - N/2, i.e. k runs over I_N = {-N/2, ..., N/2-1}.  Nodes are
real numbers in [-1/2, 1/2).  The oversampled coefficient array g returned
by :func:`fft_inverse_scaled` has length N1 and is indexed modulo N1
(g[j] is the coefficient for every grid index l = j mod N1), which is the
form the wrap-around spreading consumes directly.

The FFT is implemented here (iterative radix-2 with bit reversal, Bluestein
fallback for other lengths) so the numeric path has no dependencies beyond
array arithmetic and stays bit-reproducible.
"""

import math
from dataclasses import dataclass

import numpy as np

from .windows import Window, WindowKind

__all__ = [
    "fft",
    "ifft",
    "NfftPlan",
    "make_plan",
    "ndft_direct",
    "fft_inverse_scaled",
    "nfft_transform",
    "measured_error",
]


def _fft_pow2(a):
    """In-order iterative radix-2 DFT (negative-exponent convention)."""
    a = np.array(a, dtype=complex)
    n = a.size
    levels = n.bit_length() - 1
    rev = np.zeros(n, dtype=np.intp)
    for i in range(1, n):
        rev[i] = (rev[i >> 1] >> 1) | ((i & 1) << (levels - 1))
    a = a[rev]
    size = 2
    while size <= n:
        half = size // 2
        tw = np.exp(-2j * math.pi * np.arange(half) / size)
        blocks = a.reshape(-1, size)
        even = blocks[:, :half].copy()
        odd = blocks[:, half:] * tw
        blocks[:, :half] = even + odd
        blocks[:, half:] = even - odd
        size *= 2
    return a


def _fft_bluestein(a):
    """Chirp-z fallback: any length via one power-of-two convolution."""
    n = a.size
    M = 1 << (2 * n - 1).bit_length()
    k = np.arange(n)
    # k^2 mod 2n keeps the chirp phase argument small and exact
    chirp = np.exp(-1j * math.pi * (k * k % (2 * n)) / n)
    A = np.zeros(M, dtype=complex)
    A[:n] = a * chirp
    B = np.zeros(M, dtype=complex)
    B[:n] = np.conj(chirp)
    B[-(n - 1):] = np.conj(chirp)[1:][::-1]
    C = _fft_pow2(A) * _fft_pow2(B)
    conv = np.conj(_fft_pow2(np.conj(C))) / M
    return conv[:n] * chirp


def fft(a):
    """DFT of a complex array, X_j = sum_k a_k exp(-2 pi i j k / n)."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("fft expects a nonempty 1-d array")
    if a.size & (a.size - 1) == 0:
        return _fft_pow2(a)
    return _fft_bluestein(a)


def ifft(a):
    """Inverse DFT with the 1/n factor."""
    a = np.asarray(a, dtype=complex)
    return np.conj(fft(np.conj(a))) / a.size


@dataclass(frozen=True)
class NfftPlan:
    """Precomputed state for one (window, node set) pair.

    phi_hat holds phihat(k) for k in I_N; it must be strictly positive for
    the admissible continuous windows (and for kb/exp, whose transforms are
    also positive on I_N).  The rectangular window is only required to be
    nonzero there, since it is kept around as the deliberately bad baseline.
    """

    window: Window
    nodes: np.ndarray
    phi_hat: np.ndarray

    @property
    def params(self):
        return self.window.params


def make_plan(window, nodes):
    nodes = np.asarray(nodes, dtype=float)
    if nodes.ndim != 1:
        raise ValueError("nodes must be a 1-d array")
    if np.any(nodes < -0.5) or np.any(nodes >= 0.5):
        raise ValueError("nodes must lie in [-1/2, 1/2)")
    p = window.params
    ks = np.arange(-p.N // 2, p.N // 2)
    phi_hat = window.ft_grid(ks.astype(float))
    if window.kind is WindowKind.RECT:
        # exact zeros of sinc land on rounding noise, so compare against the
        # transform's natural scale 2m/N1
        if np.any(np.abs(phi_hat) < 1e-12 * 2.0 * p.m / p.N1):
            raise ValueError(
                "rect window has a vanishing transform at some k in I_N "
                "for these (m, sigma, N); pick parameters with "
                "2*m*k/N1 never an integer")
    elif np.any(phi_hat <= 0.0):
        raise ValueError("window transform must be positive on I_N")
    return NfftPlan(window=window, nodes=nodes, phi_hat=phi_hat)


def ndft_direct(c, nodes):
    """Exact p(x_j) = sum_{k in I_N} c_k exp(2 pi i k x_j); the oracle.

    O(N*M); k is summed in ascending order for reproducibility.
    """
    c = np.asarray(c, dtype=complex)
    nodes = np.asarray(nodes, dtype=float)
    N = c.size
    ks = np.arange(-N // 2, N // 2)
    out = np.zeros(nodes.size, dtype=complex)
    for i, k in enumerate(ks):
        out += c[i] * np.exp(2j * math.pi * k * nodes)
    return out


def fft_inverse_scaled(plan, c):
    """Oversampled coefficients g_l = (1/N1) sum_k c_k/phihat(k) e^{2pi i k l/N1}.

    Returned as a length-N1 array indexed by l mod N1.
    """
    p = plan.params
    c = np.asarray(c, dtype=complex)
    if c.size != p.N:
        raise ValueError("coefficient vector must have length N")
    ks = np.arange(-p.N // 2, p.N // 2)
    spread = np.zeros(p.N1, dtype=complex)
    spread[ks % p.N1] = c / plan.phi_hat
    return ifft(spread)


def nfft_transform(plan, c):
    """Approximate p at the plan's nodes: s(x_j) = sum_l g_l phit(x_j - l/N1).

    Only the <= 2m+1 grid indices whose periodized distance to x_j lies in
    the window support contribute; the support is narrower than 1/2, so the
    periodization reduces to the nearest image.
    """
    p = plan.params
    g = fft_inverse_scaled(plan, c)
    xj = plan.nodes
    offsets = np.arange(-p.m, p.m + 1)
    ells = np.ceil(p.N1 * xj).astype(np.intp)[:, None] + offsets[None, :]
    dist = xj[:, None] - ells / p.N1
    dist -= np.round(dist)
    vals = plan.window.value(dist)
    return np.sum(g[np.mod(ells, p.N1)] * vals, axis=1)


def measured_error(plan, c):
    """max_j |s(x_j) - p(x_j)| with the exact NDFT as ground truth."""
    s = nfft_transform(plan, c)
    pvals = ndft_direct(c, plan.nodes)
    if s.size == 0:
        return 0.0
    return float(np.max(np.abs(s - pvals)))
