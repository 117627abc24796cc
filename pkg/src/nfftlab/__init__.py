"""Compactly supported NFFT windows, aliasing error constants, and bounds."""

from .error_analysis import (EstimatorConfig, ErrorConstantEstimate,
                             EstimatorError, aliasing_function, error_constant,
                             error_constant_rect_bracket)
from .nfft import (NfftPlan, fft, fft_inverse_scaled, ifft, make_plan,
                   measured_error, ndft_direct, nfft_transform)
from .quadrature import AccuracyError, QuadratureConfig, integrate
from .windows import (FtStrategy, Window, WindowKind, WindowParams,
                      contour_integral_I, make_window)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "EstimatorConfig",
    "EstimatorError",
    "ErrorConstantEstimate",
    "FtStrategy",
    "NfftPlan",
    "QuadratureConfig",
    "Window",
    "WindowKind",
    "WindowParams",
    "__version__",
    "aliasing_function",
    "contour_integral_I",
    "error_constant",
    "error_constant_rect_bracket",
    "fft",
    "fft_inverse_scaled",
    "ifft",
    "integrate",
    "make_plan",
    "make_window",
    "measured_error",
    "ndft_direct",
    "nfft_transform",
]
