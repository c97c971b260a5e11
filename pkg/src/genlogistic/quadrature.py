"""Numerical oracle: adaptive composite Gauss-Legendre quadrature.

Nothing here touches the Gamma machinery except :func:`verify_grad_formula`,
whose right-hand side is the closed form being spot-checked.  The integrands
live in :mod:`genlogistic._kernels`.
"""
from dataclasses import dataclass
import math
from typing import Callable, NamedTuple, Optional, Tuple

import numpy as np

from . import _kernels
from .errors import ArgumentError, DomainError, NoConvergence
from .model import SigmoidParams, derivative, peak_time, tail_bounds
from .special import UNIT_DISK_GUARD, beta as beta_fn, hyp2f1

_SQRT_2PI = math.sqrt(2.0 * math.pi)
_EPS = np.finfo(float).eps
# panels per oscillation period
PANELS_PER_PERIOD = 8


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    tail_tol: float = 1e-12
    max_panels: int = 2**20
    order: int = 10

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol", "tail_tol"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ArgumentError(f"{name} must be positive, got {value!r}")
        if self.max_panels < 8:
            raise ArgumentError("max_panels must be at least 8")
        if self.order < 2:
            raise ArgumentError("order must be at least 2")


DEFAULT_CONFIG = QuadratureConfig()


class QuadResult(NamedTuple):
    value: complex
    error: float
    panels: int


def _panel_width(cap: float, frequency: float) -> float:
    if frequency == 0.0:
        return cap
    return min(cap, 2.0 * math.pi / abs(frequency) / PANELS_PER_PERIOD)


def adaptive_gl(func: Callable[[np.ndarray], np.ndarray], a: float, b: float, *,
                panel_width: float, abs_tol: float, rel_tol: float,
                max_panels: int = 2**20, order: int = 10) -> QuadResult:
    """Integrate ``func`` over [a, b] on equal panels, bisecting where needed.

    ``func`` is called with a flat array of nodes and must return values of
    the same shape.  Each panel is integrated with ``order``-point
    Gauss-Legendre both whole and as two halves; the halves are kept and
    their difference from the whole is the panel's error estimate.  A panel
    is accepted when that estimate is within its width-proportional share of
    max(abs_tol, rel_tol * |I|), or is already at rounding level.
    """
    if not b > a:
        raise ArgumentError("need a < b")
    x, w = np.polynomial.legendre.leggauss(order)
    n0 = max(1, math.ceil((b - a) / panel_width))
    if n0 > max_panels:
        raise NoConvergence(f"{n0} initial panels exceed max_panels={max_panels}")
    edges = np.linspace(a, b, n0 + 1)
    lo, hi = edges[:-1], edges[1:]
    span = b - a
    used = n0
    value = 0.0 + 0.0j
    error = 0.0
    while lo.size:
        half = 0.5 * (hi - lo)
        mid = lo + half
        quarter = 0.5 * half
        nodes = np.concatenate([
            (mid[:, None] + half[:, None] * x).ravel(),
            ((lo + quarter)[:, None] + quarter[:, None] * x).ravel(),
            ((mid + quarter)[:, None] + quarter[:, None] * x).ravel(),
        ])
        vals = np.asarray(func(nodes)).reshape(3, lo.size, order)
        coarse = (vals[0] @ w) * half
        fine = (vals[1] @ w + vals[2] @ w) * quarter
        scale = (np.abs(vals[1]) @ w + np.abs(vals[2]) @ w) * quarter
        err = np.abs(coarse - fine)
        tol = max(abs_tol, rel_tol * abs(value + fine.sum()))
        ok = (err <= tol * (hi - lo) / span) | (err <= 64.0 * _EPS * scale)
        value += fine[ok].sum()
        error += err[ok].sum()
        lo, mid, hi = lo[~ok], mid[~ok], hi[~ok]
        used += lo.size
        if used > max_panels:
            raise NoConvergence(f"quadrature needed more than {max_panels} panels")
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
    return QuadResult(complex(value), float(error), used)


def _check_cfg(cfg):
    if not isinstance(cfg, QuadratureConfig):
        raise ArgumentError("cfg must be a QuadratureConfig")


def fourier_numeric(params: SigmoidParams, omega: float,
                    cfg: QuadratureConfig = DEFAULT_CONFIG,
                    window: Optional[Tuple[float, float]] = None) -> complex:
    """F(omega) by direct quadrature of (2 pi)^{-1/2} * integral f(t) e^{-i omega t} dt.

    The integral runs over [-T1, T2] from :func:`tail_bounds` unless
    ``window`` overrides it.
    """
    _check_cfg(cfg)
    omega = float(omega)
    if window is None:
        t1, t2 = tail_bounds(params, cfg.tail_tol)
        window = (-t1, t2)
    k, b, nu = params.k, params.beta, params.nu
    pulse_fourier = _kernels.ACTIVE.pulse_fourier
    res = adaptive_gl(lambda t: pulse_fourier(t, k, b, nu, omega), window[0], window[1],
                      panel_width=_panel_width(1.0 / b, omega),
                      abs_tol=cfg.abs_tol * _SQRT_2PI, rel_tol=cfg.rel_tol,
                      max_panels=cfg.max_panels, order=cfg.order)
    return res.value / _SQRT_2PI


def i_integral_numeric(params: SigmoidParams, omega: float,
                       cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """I(omega) = (1/beta) * integral_0^inf u^{i omega/beta} (1 + k u)^{-1/nu-1} du.

    Integrated in s = ln u, where the integrand decays like e^{s} on the left
    and like k^{-1/nu-1} e^{-s/nu} on the right and oscillates at the uniform
    rate omega/beta.
    """
    _check_cfg(cfg)
    omega = float(omega)
    k, b, nu = params.k, params.beta, params.nu
    tol = cfg.tail_tol
    s_lo = math.log(b * tol)
    s_hi = nu * (math.log(nu / (b * tol)) - (1.0 / nu + 1.0) * math.log(k))
    integrand = _kernels.ACTIVE.log_u_integrand
    res = adaptive_gl(lambda s: integrand(s, k, b, nu, omega), s_lo, max(s_hi, s_lo + 1.0),
                      panel_width=_panel_width(1.0, omega / b),
                      abs_tol=cfg.abs_tol * b, rel_tol=cfg.rel_tol,
                      max_panels=cfg.max_panels, order=cfg.order)
    return res.value / b


def grad_integral_numeric(lam: complex, eta: complex, mu: complex, alpha: float,
                          cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """integral_0^inf x^{lam-1} (1+x)^eta (1+alpha x)^mu dx, in s = ln x."""
    _check_cfg(cfg)
    lam, eta, mu = complex(lam), complex(eta), complex(mu)
    alpha = float(alpha)
    p_left = lam.real
    p_right = (lam + eta + mu).real
    if not (p_left > 0.0 and p_right < 0.0 and alpha > 0.0):
        raise DomainError("integral diverges: need Re lam > 0, Re(lam+eta+mu) < 0, alpha > 0")
    tol = cfg.tail_tol
    # |integrand| bounds on x <= 1 and x >= 1 (see tail constants below)
    c_left = max(1.0, 2.0 ** eta.real) * max(1.0, (1.0 + alpha) ** mu.real)
    c_right = (max(1.0, 2.0 ** eta.real) * alpha ** mu.real
               * max(1.0, (1.0 + 1.0 / alpha) ** mu.real))
    s_lo = min(0.0, math.log(tol * p_left / c_left) / p_left)
    s_hi = max(0.0, math.log(tol * -p_right / c_right) / p_right)
    freq = abs(lam.imag) + abs(eta.imag) + abs(mu.imag)
    integrand = _kernels.ACTIVE.grad_integrand
    res = adaptive_gl(lambda s: integrand(s, lam, eta, mu, alpha), s_lo, s_hi,
                      panel_width=_panel_width(0.5, freq),
                      abs_tol=cfg.abs_tol, rel_tol=cfg.rel_tol,
                      max_panels=cfg.max_panels, order=cfg.order)
    return res.value


def grad_formula_closed_form(lam: complex, eta: complex, mu: complex, alpha: float) -> complex:
    """B(lam, -eta-mu-lam) * 2F1(-mu, lam; -mu-eta; 1-alpha)."""
    lam, eta, mu = complex(lam), complex(eta), complex(mu)
    return beta_fn(lam, -eta - mu - lam) * hyp2f1(-mu, lam, -mu - eta, 1.0 - alpha)


def verify_grad_formula(lam: complex, eta: complex, mu: complex, alpha: float,
                        cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """|quadrature - Beta * 2F1| for one parameter point of the integral identity.

    Valid only where -Re(mu + eta) > Re(lam) > 0 and |1 - alpha| is inside the
    series region of :func:`hyp2f1`.
    """
    lam, eta, mu = complex(lam), complex(eta), complex(mu)
    alpha = float(alpha)
    if not (-(mu + eta).real > lam.real > 0.0):
        raise DomainError("need -Re(mu + eta) > Re(lam) > 0")
    if not (alpha > 0.0 and abs(1.0 - alpha) < 1.0 - UNIT_DISK_GUARD):
        raise DomainError("need alpha > 0 with |1 - alpha| inside the series region")
    lhs = grad_integral_numeric(lam, eta, mu, alpha, cfg)
    rhs = grad_formula_closed_form(lam, eta, mu, alpha)
    return abs(lhs - rhs)


def grad_substitution(params: SigmoidParams, omega: float):
    """(lam, eta, mu, alpha) that turn the integral identity into I(omega)."""
    return (1.0 + 1j * omega / params.beta, 0.0j, complex(-1.0 / params.nu - 1.0), params.k)


def time_energy(params: SigmoidParams, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """integral f(t)^2 dt.  Tails use f^2 <= f(t_peak) * f."""
    _check_cfg(cfg)
    f_max = float(derivative(params, peak_time(params)))
    t1, t2 = tail_bounds(params, cfg.tail_tol / f_max)
    k, b, nu = params.k, params.beta, params.nu
    pulse = _kernels.ACTIVE.pulse
    res = adaptive_gl(lambda t: pulse(t, k, b, nu) ** 2, -t1, t2,
                      panel_width=1.0 / b, abs_tol=cfg.abs_tol, rel_tol=cfg.rel_tol,
                      max_panels=cfg.max_panels, order=cfg.order)
    return res.value.real


def frequency_cutoff(params: SigmoidParams, tol: float) -> float:
    """Omega with integral_{|w| > Omega} |F|^2 dw < tol.

    |Gamma(x - iy)| <= Gamma(x) for x > 0, so |F|^2 <= (2/pi) pi y/sinh(pi y)
    <= 4.01 y e^{-pi y} for y = omega/beta >= 1, whose two-sided tail beyond Y
    is 8.02 beta e^{-pi Y} (Y/pi + 1/pi^2).
    """
    b = params.beta
    y = 1.0
    while 8.02 * b * math.exp(-math.pi * y) * (y / math.pi + 1.0 / math.pi**2) >= tol:
        y += 0.25
    return y * b


def frequency_energy(params: SigmoidParams, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """integral |F(omega)|^2 d omega from the closed form, using |F(-w)| = |F(w)|."""
    _check_cfg(cfg)
    cutoff = frequency_cutoff(params, cfg.tail_tol)
    k, b, nu = params.k, params.beta, params.nu
    closed = _kernels.ACTIVE.closed_form
    res = adaptive_gl(lambda w: np.abs(closed(w, k, b, nu)) ** 2, 0.0, cutoff,
                      panel_width=0.5 * b, abs_tol=cfg.abs_tol, rel_tol=cfg.rel_tol,
                      max_panels=cfg.max_panels, order=cfg.order)
    return 2.0 * res.value.real
