"""Self-check suite: every closed-form identity against its oracle.

Each check returns a :class:`CheckResult` with the largest residual seen and
the gate it must stay under.  Sampling is seeded, so reports are reproducible.
Functions from :mod:`spectral` are looked up on the module at call time so a
test can swap one out and watch the corresponding gate fail.
"""
from dataclasses import dataclass, asdict
import cmath
import math
from typing import Callable, List

import numpy as np

from . import quadrature, spectral
from .model import SigmoidParams, STANDARD
from .special import gamma, gauss_degenerate_identity_residual

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
FIGURE_NUS = (1.0, 4.0, 8.0, 12.0, 1 / 4, 1 / 8, 1 / 12)
GRAD_POINTS = ((0.5, 2.0, 1.0, 2.0), (0.8, 1.0, 0.7, 1.0), (1.5, 2.0, 4.0, 3.0))


@dataclass
class CheckResult:
    name: str
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.max_residual) and self.max_residual < self.tolerance)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def random_params(rng: np.random.Generator, n: int) -> List[SigmoidParams]:
    lo = np.log([0.1, 0.5, 0.1])
    hi = np.log([10.0, 4.0, 10.0])
    return [SigmoidParams(*np.exp(rng.uniform(lo, hi))) for _ in range(n)]


def check_standard_reduction() -> CheckResult:
    omega = np.linspace(-30.0, 30.0, 1201)
    diff = spectral.fourier_closed_form(STANDARD, omega) - spectral.fourier_standard_logistic(omega)
    return CheckResult("standard_logistic_reduction", float(np.max(np.abs(diff))), 1e-12)


def check_closed_form_vs_quadrature(n_omega: int = 16) -> CheckResult:
    omega = np.linspace(-20.0, 20.0, n_omega)
    worst = 0.0
    for nu in FIGURE_NUS:
        p = SigmoidParams(1.0, 2.0, nu)
        closed = spectral.fourier_closed_form(p, omega)
        for w, c in zip(omega, closed):
            worst = max(worst, abs(quadrature.fourier_numeric(p, w) - c))
    return CheckResult("closed_form_vs_quadrature", worst, 1e-8)


def check_i_integral_vs_quadrature() -> CheckResult:
    cases = [(SigmoidParams(1.0, 2.0, 1.0), 2.0), (SigmoidParams(2.0, 1.0, 1.0), 1.0),
             (SigmoidParams(3.0, 1.5, 0.7), 5.0), (SigmoidParams(0.5, 2.0, 4.0), -3.0)]
    worst = max(abs(quadrature.i_integral_numeric(p, w) - spectral.log_i_integral_closed_form(p, w))
                for p, w in cases)
    return CheckResult("i_integral_vs_quadrature", worst, 1e-8)


def check_shift_identity(n: int = 200, seed: int = 1) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for p in random_params(rng, n):
        w = float(rng.uniform(-20.0, 20.0))
        full = spectral.fourier_closed_form(p, w)
        base = spectral.fourier_closed_form(SigmoidParams(1.0, p.beta, p.nu), w)
        worst = max(worst, abs(full - spectral.shift_phase(p, w) * base) / abs(full))
    return CheckResult("shift_identity", worst, 1e-13)


def check_polynomial_relation() -> CheckResult:
    omega = np.linspace(-20.0, 20.0, 161)
    worst = 0.0
    for b in (1.0, 2.0):
        base = spectral.fourier_closed_form(SigmoidParams(1.0, b, 1.0), omega)
        for n in range(2, 13):
            target = spectral.fourier_closed_form(SigmoidParams(1.0, b, 1.0 / n), omega)
            built = spectral.polynomial_multiplier(n, b, omega) * base
            worst = max(worst, float(np.max(np.abs(target - built) / np.abs(target))))
    return CheckResult("polynomial_relation", worst, 1e-10)


def check_dc_value(n: int = 100, seed: int = 2) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = max(abs(spectral.fourier_closed_form(p, 0.0) - SQRT_2_OVER_PI) for p in random_params(rng, n))
    return CheckResult("dc_normalization", worst, 1e-14)


def _random_strip(rng, n, re_half, im_half):
    z = rng.uniform(-re_half, re_half, n) + 1j * rng.uniform(-im_half, im_half, n)
    # keep away from the poles
    return z[np.abs(z - np.round(z.real)) > 1e-3]


def check_gamma_reflection(n: int = 1000, seed: int = 3) -> CheckResult:
    rng = np.random.default_rng(seed)
    z = _random_strip(rng, n, 10.0, 5.0)
    lhs = gamma(z) * gamma(1.0 - z)
    rhs = np.pi / np.sin(np.pi * z)
    return CheckResult("gamma_reflection", float(np.max(np.abs(lhs - rhs) / np.abs(rhs))), 1e-11)


def check_gamma_recurrence(n: int = 1000, seed: int = 4) -> CheckResult:
    rng = np.random.default_rng(seed)
    z = _random_strip(rng, n, 10.0, 50.0)
    up = gamma(z + 1.0)
    res = np.abs(up - z * gamma(z)) / np.abs(up)
    return CheckResult("gamma_recurrence", float(np.max(res)), 1e-12)


def check_grad_formula() -> CheckResult:
    worst = 0.0
    for k, b, nu, w in GRAD_POINTS:
        args = quadrature.grad_substitution(SigmoidParams(k, b, nu), w)
        worst = max(worst, quadrature.verify_grad_formula(*args))
    return CheckResult("grad_formula_spot_check", worst, 1e-8)


def check_degenerate_2f1(n: int = 100, seed: int = 5) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        z = cmath.rect(rng.uniform(0.0, 0.5), rng.uniform(-math.pi, math.pi))
        worst = max(worst, gauss_degenerate_identity_residual(a, z))
    return CheckResult("degenerate_2f1_identity", worst, 1e-12)


def check_parseval() -> CheckResult:
    worst = 0.0
    for nu in FIGURE_NUS:
        p = SigmoidParams(1.0, 2.0, nu)
        e_t = quadrature.time_energy(p)
        e_w = quadrature.frequency_energy(p)
        worst = max(worst, abs(e_t - e_w) / e_t)
    return CheckResult("parseval", worst, 1e-6)


ALL_CHECKS: List[Callable[[], CheckResult]] = [
    check_standard_reduction,
    check_closed_form_vs_quadrature,
    check_i_integral_vs_quadrature,
    check_shift_identity,
    check_polynomial_relation,
    check_dc_value,
    check_gamma_reflection,
    check_gamma_recurrence,
    check_grad_formula,
    check_degenerate_2f1,
    check_parseval,
]


def run_all() -> List[CheckResult]:
    return [check() for check in ALL_CHECKS]


def format_report(results: List[CheckResult]) -> str:
    lines = [f"{'check':<30} {'max_residual':>13} {'tolerance':>10}  status"]
    for r in results:
        lines.append(f"{r.name:<30} {r.max_residual:>13.3e} {r.tolerance:>10.0e}  "
                     f"{'PASS' if r.passed else 'FAIL'}")
    ok = all(r.passed for r in results)
    lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"
