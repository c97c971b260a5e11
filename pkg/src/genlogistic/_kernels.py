"""Array kernels: complex Lanczos Gamma and the quadrature integrands.

Every kernel exists twice with identical signatures, once as vectorized numpy
and once as an explicit loop compiled by numba.  ``ACTIVE`` points at the set
chosen by :mod:`genlogistic._backend`; the other set stays importable so the
two paths can be checked against each other and benchmarked.

All kernels take 1-d contiguous arrays and scalar parameters and never raise:
argument validation happens in the public modules.
"""
import cmath
import math
from types import SimpleNamespace

import numpy as np

from ._backend import HAVE_NUMBA, USE_NUMBA, njit

# Lanczos approximation, g = 7, n = 9.
LANCZOS_G = 7.0
LANCZOS_COEF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_SQRT_2PI = math.sqrt(2.0 * math.pi)


# --------------------------------------------------------------------------
# numpy path
# --------------------------------------------------------------------------

def _np_gamma_right(w):
    # Valid for Re w >= 1/2.
    z = w - 1.0
    acc = np.full(z.shape, LANCZOS_COEF[0], dtype=np.complex128)
    for i in range(1, LANCZOS_COEF.size):
        acc += LANCZOS_COEF[i] / (z + i)
    t = z + (LANCZOS_G + 0.5)
    return np.exp((z + 0.5) * np.log(t) - t) * acc * _SQRT_2PI


def np_gamma(z):
    z = np.asarray(z, dtype=np.complex128)
    reflect = z.real < 0.5
    w = np.where(reflect, 1.0 - z, z)
    with np.errstate(all="ignore"):
        g = _np_gamma_right(w)
        # sin(pi z) with the integer part removed first, for accuracy far
        # from the origin.
        n = np.round(z.real)
        sign = np.where(np.mod(n, 2.0) == 0.0, 1.0, -1.0)
        s = np.sin(np.pi * (z - n)) * sign
        out = np.where(reflect, np.pi / (s * g), g)
    return out


def np_pulse(t, k, beta, nu):
    t = np.asarray(t, dtype=np.float64)
    log_u = math.log(k) - beta * t
    inv_nu = 1.0 / nu
    with np.errstate(over="ignore"):
        big = log_u > 0.0
        e = np.exp(np.where(big, -log_u, log_u))
        expo = np.where(big, -inv_nu * log_u, log_u) - (inv_nu + 1.0) * np.log1p(e)
    return (2.0 * beta * inv_nu) * np.exp(expo)


def np_pulse_fourier(t, k, beta, nu, omega):
    t = np.asarray(t, dtype=np.float64)
    return np_pulse(t, k, beta, nu) * np.exp(-1j * omega * t)


def np_log_u_integrand(s, k, beta, nu, omega):
    # u^{i omega/beta} (1 + k u)^{-1/nu - 1} du with u = e^s.
    s = np.asarray(s, dtype=np.float64)
    lam = 1.0 + 1j * omega / beta
    return np.exp(lam * s - (1.0 / nu + 1.0) * np.log1p(k * np.exp(s)))


def np_grad_integrand(s, lam, eta, mu, alpha):
    # x^{lam-1} (1+x)^eta (1+alpha x)^mu dx with x = e^s.
    s = np.asarray(s, dtype=np.float64)
    x = np.exp(s)
    return np.exp(lam * s + eta * np.log1p(x) + mu * np.log1p(alpha * x))


def np_closed_form(omega, k, beta, nu):
    omega = np.asarray(omega, dtype=np.float64)
    y = omega / beta
    inv_nu = 1.0 / nu
    num = np_gamma(1.0 + 1j * y) * np_gamma(inv_nu - 1j * y)
    phase = np.exp(-1j * omega * (math.log(k) / beta))
    # same approximation in the denominator so F(0) is sqrt(2/pi) to rounding
    denom = np_gamma(np.array([inv_nu + 0j]))[0].real
    return math.sqrt(2.0 / math.pi) * phase * num / denom


numpy_kernels = SimpleNamespace(
    name="numpy",
    gamma=np_gamma,
    pulse=np_pulse,
    pulse_fourier=np_pulse_fourier,
    log_u_integrand=np_log_u_integrand,
    grad_integrand=np_grad_integrand,
    closed_form=np_closed_form,
)


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------

@njit
def _nb_gamma_one(z):
    if z.real < 0.5:
        n = math.floor(z.real + 0.5)
        s = cmath.sin(math.pi * (z - n))
        if n % 2.0 != 0.0:
            s = -s
        return math.pi / (s * _nb_gamma_right(1.0 - z))
    return _nb_gamma_right(z)


@njit
def _nb_gamma_right(w):
    z = w - 1.0
    acc = 0.99999999999980993 + 0j
    acc += 676.5203681218851 / (z + 1.0)
    acc += -1259.1392167224028 / (z + 2.0)
    acc += 771.32342877765313 / (z + 3.0)
    acc += -176.61502916214059 / (z + 4.0)
    acc += 12.507343278686905 / (z + 5.0)
    acc += -0.13857109526572012 / (z + 6.0)
    acc += 9.9843695780195716e-6 / (z + 7.0)
    acc += 1.5056327351493116e-7 / (z + 8.0)
    t = z + 7.5
    return cmath.exp((z + 0.5) * cmath.log(t) - t) * acc * 2.5066282746310002


@njit
def nb_gamma(z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        out[i] = _nb_gamma_one(z[i])
    return out


@njit
def _nb_pulse_one(t, log_k, beta, nu):
    log_u = log_k - beta * t
    inv_nu = 1.0 / nu
    if log_u > 0.0:
        expo = -inv_nu * log_u - (inv_nu + 1.0) * math.log1p(math.exp(-log_u))
    else:
        expo = log_u - (inv_nu + 1.0) * math.log1p(math.exp(log_u))
    return 2.0 * beta * inv_nu * math.exp(expo)


@njit
def nb_pulse(t, k, beta, nu):
    log_k = math.log(k)
    out = np.empty(t.shape[0], dtype=np.float64)
    for i in range(t.shape[0]):
        out[i] = _nb_pulse_one(t[i], log_k, beta, nu)
    return out


@njit
def nb_pulse_fourier(t, k, beta, nu, omega):
    log_k = math.log(k)
    out = np.empty(t.shape[0], dtype=np.complex128)
    for i in range(t.shape[0]):
        ph = -omega * t[i]
        out[i] = _nb_pulse_one(t[i], log_k, beta, nu) * complex(math.cos(ph), math.sin(ph))
    return out


@njit
def nb_log_u_integrand(s, k, beta, nu, omega):
    lam = complex(1.0, omega / beta)
    p = 1.0 / nu + 1.0
    out = np.empty(s.shape[0], dtype=np.complex128)
    for i in range(s.shape[0]):
        out[i] = cmath.exp(lam * s[i] - p * math.log1p(k * math.exp(s[i])))
    return out


@njit
def nb_grad_integrand(s, lam, eta, mu, alpha):
    out = np.empty(s.shape[0], dtype=np.complex128)
    for i in range(s.shape[0]):
        x = math.exp(s[i])
        out[i] = cmath.exp(lam * s[i] + eta * math.log1p(x) + mu * math.log1p(alpha * x))
    return out


@njit
def nb_closed_form(omega, k, beta, nu):
    inv_nu = 1.0 / nu
    shift = math.log(k) / beta
    scale = math.sqrt(2.0 / math.pi) / _nb_gamma_one(complex(inv_nu, 0.0)).real
    out = np.empty(omega.shape[0], dtype=np.complex128)
    for i in range(omega.shape[0]):
        y = omega[i] / beta
        ph = -omega[i] * shift
        num = _nb_gamma_one(complex(1.0, y)) * _nb_gamma_one(complex(inv_nu, -y))
        out[i] = scale * complex(math.cos(ph), math.sin(ph)) * num
    return out


def _wrap_1d(kernel):
    def call(x, *params):
        x = np.asarray(x)
        flat = np.ascontiguousarray(x.ravel(), dtype=np.complex128 if x.dtype.kind == "c" else np.float64)
        return kernel(flat, *params).reshape(x.shape)
    call.__name__ = kernel.__name__
    call.__doc__ = kernel.__doc__
    return call


def _nb_gamma_entry(z):
    z = np.asarray(z, dtype=np.complex128)
    return nb_gamma(np.ascontiguousarray(z.ravel())).reshape(z.shape)


numba_kernels = SimpleNamespace(
    name="numba",
    gamma=_nb_gamma_entry,
    pulse=_wrap_1d(nb_pulse),
    pulse_fourier=_wrap_1d(nb_pulse_fourier),
    log_u_integrand=_wrap_1d(nb_log_u_integrand),
    grad_integrand=_wrap_1d(nb_grad_integrand),
    closed_form=_wrap_1d(nb_closed_form),
) if HAVE_NUMBA else None

ACTIVE = numba_kernels if USE_NUMBA else numpy_kernels
