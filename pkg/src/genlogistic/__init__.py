"""Generalized logistic growth pulse and its Fourier transform.

The transform of f = y' for y(t) = -1 + 2 (1 + k e^{-beta t})^{-1/nu} has the
closed form sqrt(2/pi) k^{-i omega/beta} Gamma(1 + i omega/beta)
Gamma(1/nu - i omega/beta) / Gamma(1/nu).  The package evaluates it, the
special cases it reduces to, and an independent quadrature oracle.
"""
from ._backend import backend_name
from .errors import ArgumentError, DomainError, GenLogisticError, NoConvergence, PoleError
from .model import (SigmoidParams, TimeSeries, curve, derivative, derivative_slope,
                    higher_derivative, peak_time, sample_time_domain, tail_bounds)
from .quadrature import (QuadratureConfig, fourier_numeric, i_integral_numeric,
                         verify_grad_formula)
from .special import beta, gamma, gauss_degenerate_identity_residual, hyp2f1, pochhammer
from .spectral import (FrequencyGrid, SpectrumTable, fourier_closed_form,
                       fourier_standard_logistic, nth_derivative_spectrum,
                       polynomial_multiplier, sample_spectrum, shift_phase)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError", "DomainError", "GenLogisticError", "NoConvergence", "PoleError",
    "SigmoidParams", "TimeSeries", "curve", "derivative", "derivative_slope",
    "higher_derivative", "peak_time", "sample_time_domain", "tail_bounds",
    "QuadratureConfig", "fourier_numeric", "i_integral_numeric", "verify_grad_formula",
    "beta", "gamma", "gauss_degenerate_identity_residual", "hyp2f1", "pochhammer",
    "FrequencyGrid", "SpectrumTable", "fourier_closed_form", "fourier_standard_logistic",
    "nth_derivative_spectrum", "polynomial_multiplier", "sample_spectrum", "shift_phase",
    "backend_name",
]
