"""Generalized logistic growth curve y(t) = -1 + 2 (1 + k e^{-beta t})^{-1/nu}.

All functions accept a scalar ``t`` (returning ``float``) or an array.  The
pulse f = y' is evaluated through ``log u = log k - beta t`` so it neither
overflows for very negative t nor loses precision in either tail.
"""
from dataclasses import dataclass, field
import math

import numpy as np

from . import _kernels
from .errors import ArgumentError


@dataclass(frozen=True)
class SigmoidParams:
    """Shape triple (k, beta, nu) of one generalized logistic curve."""

    k: float = 1.0
    beta: float = 2.0
    nu: float = 1.0

    def __post_init__(self):
        for name in ("k", "beta", "nu"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0.0:
                raise ArgumentError(f"{name} must be positive and finite, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def label(self) -> str:
        return f"k={self.k:.6g} beta={self.beta:.6g} nu={self.nu:.6g}"

    def as_dict(self) -> dict:
        return {"k": self.k, "beta": self.beta, "nu": self.nu}


STANDARD = SigmoidParams(1.0, 2.0, 1.0)


@dataclass(frozen=True)
class TimeSeries:
    t: np.ndarray
    values: np.ndarray
    params: SigmoidParams
    which: str = field(default="derivative")

    def __post_init__(self):
        t = np.array(self.t, dtype=float)
        values = np.array(self.values, dtype=float)
        if t.ndim != 1 or t.shape != values.shape:
            raise ArgumentError("t and values must be 1-d arrays of equal length")
        if t.size > 1 and not np.all(np.diff(t) > 0):
            raise ArgumentError("t must be strictly increasing")
        t.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.t.size


def _out(t, arr):
    return float(arr) if np.ndim(t) == 0 else arr


def curve(params: SigmoidParams, t):
    """y(t), strictly increasing from -1 to 1."""
    t_arr = np.asarray(t, dtype=float)
    log_u = math.log(params.k) - params.beta * t_arr
    # log1p(u) without overflowing u = e^{log_u}
    with np.errstate(over="ignore"):
        log1p_u = np.where(log_u > 0.0,
                           log_u + np.log1p(np.exp(-np.abs(log_u))),
                           np.log1p(np.exp(np.minimum(log_u, 0.0))))
    y = 1.0 + 2.0 * np.expm1(-log1p_u / params.nu)
    return _out(t, y)


def derivative(params: SigmoidParams, t):
    """f(t) = y'(t) = (2 k beta/nu) e^{-beta t} (1 + k e^{-beta t})^{-1/nu - 1}."""
    t_arr = np.asarray(t, dtype=float)
    return _out(t, _kernels.ACTIVE.pulse(t_arr, params.k, params.beta, params.nu))


def derivative_slope(params: SigmoidParams, t):
    """Analytic f'(t) = y''(t).

    With u = k e^{-beta t}:  f' = -(2 beta^2/nu) u (1+u)^{-1/nu-2} (1 - u/nu).
    """
    t_arr = np.asarray(t, dtype=float)
    k, beta, nu = params.k, params.beta, params.nu
    log_u = math.log(k) - beta * t_arr
    f = _kernels.ACTIVE.pulse(t_arr, k, beta, nu)
    # f' = -beta f (1 - u/nu)/(1 + u); the ratio is rewritten for large u.
    with np.errstate(over="ignore"):
        inv_u = np.exp(-np.maximum(log_u, 0.0))
        u = np.exp(np.minimum(log_u, 0.0))
        ratio = np.where(log_u > 0.0,
                         (inv_u - 1.0 / nu) / (inv_u + 1.0),
                         (1.0 - u / nu) / (1.0 + u))
    return _out(t, -beta * f * ratio)


def higher_derivative(params: SigmoidParams, t, order: int, h: float = 1e-3):
    """d^order f/dt^order by central differences of the analytic f.

    ``order = 0`` returns f itself.  Accuracy is O(h^2); intended for
    qualitative work, not for identities at tight tolerance.
    """
    if order < 0:
        raise ArgumentError("order must be non-negative")
    t_arr = np.asarray(t, dtype=float)
    if order == 0:
        return derivative(params, t)
    # central difference stencil: sum_j (-1)^j C(order, j) f(t + (order/2 - j) h)
    acc = np.zeros_like(t_arr)
    for j in range(order + 1):
        coef = (-1) ** j * math.comb(order, j)
        acc = acc + coef * derivative(params, t_arr + (order / 2.0 - j) * h)
    return _out(t, acc / h**order)


def peak_time(params: SigmoidParams) -> float:
    """Location ln(k/nu)/beta of the maximum of f."""
    return math.log(params.k / params.nu) / params.beta


def tail_bounds(params: SigmoidParams, tol: float):
    """Window [-T1, T2] outside which each tail of f integrates to < ``tol``.

    Uses f(t) <= (2 k beta/nu) e^{-beta t} for the right tail and
    f(t) <= (2 beta/nu) k^{-1/nu} e^{beta t/nu} for the left, so that
    1 - y(T2) < tol and y(-T1) + 1 < tol as well.
    """
    if tol <= 0.0:
        raise ArgumentError("tol must be positive")
    k, beta, nu = params.k, params.beta, params.nu
    t2 = math.log(2.0 * k / (nu * tol)) / beta
    t1 = (nu / beta) * (math.log(2.0 / tol) - math.log(k) / nu)
    return t1, t2


def sample_time_domain(params: SigmoidParams, t_min: float, t_max: float, n: int,
                       which: str = "derivative") -> TimeSeries:
    if not t_min < t_max:
        raise ArgumentError("need t_min < t_max")
    if int(n) != n or n < 2:
        raise ArgumentError("need at least two samples")
    funcs = {"curve": curve, "derivative": derivative}
    if which not in funcs:
        raise ArgumentError(f"which must be 'curve' or 'derivative', got {which!r}")
    t = np.linspace(t_min, t_max, int(n))
    return TimeSeries(t, funcs[which](params, t), params, which)
