"""Fourier transform of the logistic pulse f = y'.

Convention: F(omega) = (2 pi)^{-1/2} * integral f(t) e^{-i omega t} dt.  For
the generalized logistic pulse this is

    F(omega) = sqrt(2/pi) e^{-i omega ln(k)/beta}
               Gamma(1 + i omega/beta) Gamma(1/nu - i omega/beta) / Gamma(1/nu).
"""
from dataclasses import dataclass
import math

import numpy as np

from . import _kernels
from .errors import ArgumentError
from .model import SigmoidParams
from .special import gamma

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def _out(omega, arr):
    return complex(arr) if np.ndim(omega) == 0 else arr


@dataclass(frozen=True)
class FrequencyGrid:
    omega_min: float
    omega_max: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.omega_min) and math.isfinite(self.omega_max)):
            raise ArgumentError("grid bounds must be finite")
        if not self.omega_min < self.omega_max:
            raise ArgumentError("need omega_min < omega_max")
        if int(self.n) != self.n or self.n < 2:
            raise ArgumentError("need n >= 2")

    @property
    def symmetric(self) -> bool:
        return self.omega_min == -self.omega_max

    def values(self) -> np.ndarray:
        w = np.linspace(self.omega_min, self.omega_max, int(self.n))
        if self.symmetric:
            # exact antisymmetry, so the midpoint of an odd grid is exactly 0
            w = 0.5 * (w - w[::-1])
        return w


@dataclass(frozen=True)
class SpectrumTable:
    omega: np.ndarray
    F: np.ndarray
    params: SigmoidParams

    def __post_init__(self):
        omega = np.array(self.omega, dtype=float)
        F = np.array(self.F, dtype=complex)
        if omega.ndim != 1 or omega.shape != F.shape:
            raise ArgumentError("omega and F must be 1-d arrays of equal length")
        omega.flags.writeable = False
        F.flags.writeable = False
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "F", F)

    def __len__(self):
        return self.omega.size

    @property
    def real(self) -> np.ndarray:
        return self.F.real

    @property
    def imag(self) -> np.ndarray:
        return self.F.imag

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.F)

    @property
    def phase(self) -> np.ndarray:
        return np.angle(self.F)

    def conjugate_symmetry_residual(self) -> float:
        """max |F(-omega) - conj F(omega)|; only meaningful on symmetric grids."""
        if not np.array_equal(self.omega, -self.omega[::-1]):
            raise ArgumentError("grid is not symmetric about 0")
        return float(np.max(np.abs(self.F[::-1] - np.conj(self.F))))


def fourier_closed_form(params: SigmoidParams, omega):
    """Closed-form F(omega) for the pulse of ``params``; scalar or array omega."""
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    out = _kernels.ACTIVE.closed_form(w, params.k, params.beta, params.nu)
    return _out(omega, out.reshape(np.shape(omega)))


def fourier_standard_logistic(omega):
    """Transform of sech^2(t): sqrt(2/pi) x/sinh(x) with x = pi omega/2."""
    x = np.abs(np.asarray(omega, dtype=float)) * (math.pi / 2.0)
    small = x < 1e-8
    with np.errstate(invalid="ignore", over="ignore"):
        # x/sinh(x) written as 2x e^{-x}/(1 - e^{-2x}) to stay finite for large x
        ratio = 2.0 * x * np.exp(-x) / -np.expm1(-2.0 * x)
    ratio = np.where(small, 1.0 - x * x / 6.0, ratio)
    res = SQRT_2_OVER_PI * ratio
    return complex(res) if np.ndim(omega) == 0 else res.astype(complex)


def shift_phase(params: SigmoidParams, omega):
    """e^{-i omega ln(k)/beta}: the time shift ln(k)/beta seen in frequency."""
    w = np.asarray(omega, dtype=float)
    out = np.exp(-1j * w * (math.log(params.k) / params.beta))
    return _out(omega, out)


def polynomial_multiplier(n: int, beta: float, omega):
    """(1/Gamma(n)) prod_{j=1}^{n-1} (j - i omega/beta).

    Multiplying F(omega; k=1, nu=1) by this gives F(omega; k=1, nu=1/n) for the
    same beta.  The ratio omega/beta comes from applying Gamma(z+1) = z Gamma(z)
    to Gamma(n - i omega/beta); with bare omega the relation holds only at
    beta = 1.
    """
    if int(n) != n or n < 2:
        raise ArgumentError("polynomial_multiplier needs an integer n >= 2")
    if beta <= 0:
        raise ArgumentError("beta must be positive")
    w = np.asarray(omega, dtype=float)
    y = w / beta
    acc = np.ones_like(y, dtype=complex)
    for j in range(1, int(n)):
        acc = acc * (j - 1j * y)
    return _out(omega, acc / math.factorial(int(n) - 1))


def nth_derivative_spectrum(params: SigmoidParams, n: int, omega):
    """(i omega)^n F(omega): transform of the n-th time derivative of f."""
    if int(n) != n or n < 0:
        raise ArgumentError("n must be a non-negative integer")
    w = np.asarray(omega, dtype=float)
    return _out(omega, (1j * w) ** int(n) * fourier_closed_form(params, w))


def log_i_integral_closed_form(params: SigmoidParams, omega):
    """I(omega) = Gamma(1+i omega/beta) Gamma(1/nu - i omega/beta) k^{-1-i omega/beta}
    / (beta Gamma(1 + 1/nu)), the integral that F is proportional to."""
    w = np.asarray(omega, dtype=float)
    k, beta, nu = params.k, params.beta, params.nu
    y = w / beta
    num = gamma(1.0 + 1j * y) * gamma(1.0 / nu - 1j * y)
    power = np.exp(-(1.0 + 1j * y) * math.log(k))
    return _out(omega, num * power / (beta * math.gamma(1.0 + 1.0 / nu)))


def sample_spectrum(params: SigmoidParams, grid: FrequencyGrid) -> SpectrumTable:
    if not isinstance(grid, FrequencyGrid):
        raise ArgumentError("grid must be a FrequencyGrid")
    omega = grid.values()
    return SpectrumTable(omega, fourier_closed_form(params, omega), params)
