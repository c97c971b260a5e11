"""Exit criteria A1-A10.  Each test prints one PASS/FAIL line."""
import math
import time

import numpy as np
import pytest

from genlogistic import cli
from genlogistic.model import SigmoidParams, derivative, peak_time, tail_bounds
from genlogistic.quadrature import (fourier_numeric, frequency_energy, grad_substitution,
                                    time_energy, verify_grad_formula)
from genlogistic.special import gamma
from genlogistic.spectral import (fourier_closed_form, polynomial_multiplier, shift_phase)

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)
FIGURE_NUS = (1, 4, 8, 12, 1 / 4, 1 / 8, 1 / 12)


def random_params(rng, n):
    lo, hi = np.log([0.1, 0.5, 0.1]), np.log([10, 4, 10])
    return [SigmoidParams(*np.exp(rng.uniform(lo, hi))) for _ in range(n)]


def test_a1_oracle_agreement(report):
    omega = np.linspace(-20, 20, 64)
    fourier_numeric(SigmoidParams(1, 2, 1), 1.0)  # JIT warm-up outside the timing
    start = time.perf_counter()
    worst = 0.0
    for nu in FIGURE_NUS:
        p = SigmoidParams(1, 2, nu)
        closed = fourier_closed_form(p, omega)
        for w, c in zip(omega, closed):
            worst = max(worst, abs(fourier_numeric(p, w) - c))
    elapsed = time.perf_counter() - start
    ok = report("A1", f"closed form vs quadrature, 7 sets x 64 omegas ({elapsed:.1f} s)", worst, 1e-8,
                worst < 1e-8 and elapsed < 10.0)
    assert ok


def test_a2_standard_reduction(report):
    omega = np.linspace(-30, 30, 12001)
    x = np.pi * omega / 2
    with np.errstate(invalid="ignore"):
        ref = SQRT_2_OVER_PI * np.where(x == 0, 1.0, x / np.sinh(x))
    worst = float(np.max(np.abs(fourier_closed_form(SigmoidParams(1, 2, 1), omega) - ref)))
    assert report("A2", "reduction to sqrt(2/pi) x/sinh x on [-30, 30]", worst, 1e-12, worst < 1e-12)


def test_a3_dc_normalization(report):
    rng = np.random.default_rng(2024)
    worst = max(abs(fourier_closed_form(p, 0.0) - SQRT_2_OVER_PI) for p in random_params(rng, 100))
    assert report("A3", "F(0) = sqrt(2/pi), 100 random sets", worst, 1e-14, worst < 1e-14)


def test_a4_polynomial_multiplier(report):
    omega = np.linspace(-20, 20, 401)
    worst = 0.0
    for beta in (1.0, 2.0):
        base = fourier_closed_form(SigmoidParams(1, beta, 1), omega)
        for n in range(2, 13):
            target = fourier_closed_form(SigmoidParams(1, beta, 1 / n), omega)
            built = polynomial_multiplier(n, beta, omega) * base
            worst = max(worst, float(np.max(np.abs(target - built) / np.abs(target))))
    assert report("A4", "nu = 1/n polynomial relation, n = 2..12, beta in {1, 2}", worst, 1e-10, worst < 1e-10)


def test_a5_shift_identity(report):
    rng = np.random.default_rng(55)
    worst_abs = worst_rel = 0.0
    for p in random_params(rng, 1000):
        w = rng.uniform(-20, 20)
        full = fourier_closed_form(p, w)
        diff = abs(full - shift_phase(p, w) * fourier_closed_form(SigmoidParams(1, p.beta, p.nu), w))
        worst_abs = max(worst_abs, diff)
        worst_rel = max(worst_rel, diff / abs(full))
    worst = max(worst_abs, worst_rel)
    assert report("A5", "shift identity, 1000 random (k, beta, nu, omega), abs and rel", worst, 1e-13,
                  worst < 1e-13)


def test_a6_gamma_properties(report):
    rng = np.random.default_rng(66)
    z = rng.uniform(-10, 10, 1000) + 1j * rng.uniform(-50, 50, 1000)
    z = z[np.abs(z - np.round(z.real)) > 1e-3]
    up = gamma(z + 1)
    recurrence = float(np.max(np.abs(up - z * gamma(z)) / np.abs(up)))

    z = rng.uniform(-10, 10, 1000) + 1j * rng.uniform(-5, 5, 1000)
    z = z[np.abs(z - np.round(z.real)) > 1e-3]
    rhs = np.pi / np.sin(np.pi * z)
    reflection = float(np.max(np.abs(gamma(z) * gamma(1 - z) - rhs) / np.abs(rhs)))

    g = gamma(z)
    conjugation = float(np.max(np.abs(gamma(np.conj(z)) - np.conj(g)) / np.abs(g)))

    y = np.array([0.5, 1, 2, 5, 10, 20])
    exact = np.sqrt(np.pi * y / np.sinh(np.pi * y))
    vertical = float(np.max(np.abs(np.abs(gamma(1 + 1j * y)) - exact) / exact))

    ok = [
        report("A6a", "gamma recurrence, 1000 points", recurrence, 1e-12, recurrence < 1e-12),
        report("A6b", "gamma reflection, 1000 points", reflection, 1e-11, reflection < 1e-11),
        report("A6c", "gamma conjugation", conjugation, 1e-13, conjugation < 1e-13),
        report("A6d", "|gamma(1+iy)| vertical-line law", vertical, 1e-10, vertical < 1e-10),
    ]
    assert all(ok)


def test_a7_grad_spot_check(report):
    worst = 0.0
    for k, beta, nu, w in [(0.5, 2, 1, 2), (0.8, 1, 0.7, 1), (1.5, 2, 4, 3)]:
        worst = max(worst, verify_grad_formula(*grad_substitution(SigmoidParams(k, beta, nu), w)))
    assert report("A7", "integral identity at the substitution point, 3 cases", worst, 1e-8, worst < 1e-8)


def _dense_argmax(p):
    t1, t2 = tail_bounds(p, 1e-3)
    coarse = np.arange(-t1, t2, 1e-2)
    c = coarse[np.argmax(derivative(p, coarse))]
    fine = np.arange(c - 0.05, c + 0.05, 1e-4)
    return fine[np.argmax(derivative(p, fine))]


def test_a8_peak_location(report):
    rng = np.random.default_rng(88)
    worst = 0.0
    for p in random_params(rng, 100):
        worst = max(worst, abs(_dense_argmax(p) - peak_time(p)))
    signs_ok = all((peak_time(SigmoidParams(1, b, nu)) < 0) == (nu > 1) and
                   (peak_time(SigmoidParams(1, b, nu)) > 0) == (nu < 1)
                   for nu in (0.05, 0.3, 0.9, 1.1, 4, 12) for b in (0.5, 2))
    ok = report("A8", "dense argmax vs ln(k/nu)/beta, 100 sets (+ shift direction)", worst, 1e-4,
                worst <= 1e-4 and signs_ok)
    assert ok


def test_a9_parseval(report):
    worst = 0.0
    for nu in FIGURE_NUS:
        p = SigmoidParams(1, 2, nu)
        e_t = time_energy(p)
        worst = max(worst, abs(e_t - frequency_energy(p)) / e_t)
    assert report("A9", "Parseval, figure parameter sets", worst, 1e-6, worst < 1e-6)


def _figure_checks():
    """Qualitative features of the three figures, from the default CLI tables."""
    failures = []

    td = cli.cmd_time_domain(cli.FIGURE_1_2_SETS, *cli.DEFAULT_GRIDS["time-domain"])
    peaks = []
    for i, (p, _) in enumerate(td.curves):
        f = td.column("derivative", i)
        d = np.sign(np.diff(f))
        if np.count_nonzero(np.diff(d[d != 0]) != 0) != 1:
            failures.append(f"time-domain {p.label} not unimodal")
        peaks.append((p.nu, td.axis_values[np.argmax(f)]))
    peaks.sort()
    if not all(a[1] > b[1] for a, b in zip(peaks, peaks[1:])):
        failures.append("peaks not ordered by nu")

    sp = cli.cmd_spectrum(cli.FIGURE_1_2_SETS, *cli.DEFAULT_GRIDS["spectrum"])
    w = sp.axis_values
    pos = w > 0
    mags = []
    for i, (p, _) in enumerate(sp.curves):
        m = sp.column("magnitude", i)
        if not np.array_equal(m, m[::-1]):
            failures.append(f"spectrum {p.label} magnitude not even")
        if not np.all(np.diff(m[pos]) < 0):
            failures.append(f"spectrum {p.label} magnitude not decreasing")
        mags.append((1 / p.nu, m))
    mags.sort(key=lambda t: t[0])
    for (_, lo), (_, hi) in zip(mags, mags[1:]):
        if not np.all(hi[w != 0] > lo[w != 0]):
            failures.append("magnitudes not nested by 1/nu")

    pa = cli.cmd_parametric(cli.FIGURE_3_SETS, *cli.DEFAULT_GRIDS["parametric"])
    zero = np.flatnonzero(pa.axis_values == 0.0)
    if zero.size != 1:
        failures.append("parametric grid misses omega = 0")
    for i, (p, _) in enumerate(pa.curves):
        re, im = pa.column("re", i), pa.column("im", i)
        if abs(re[zero[0]] - SQRT_2_OVER_PI) > 1e-15 or im[zero[0]] != 0.0:
            failures.append(f"parametric {p.label} does not start at (sqrt(2/pi), 0)")
        if p.nu == 1.0 and np.max(np.abs(im)) >= 1e-13:
            failures.append("nu = 1 trace leaves the real axis")
    return failures


def test_a10_figure_reproduction(report):
    failures = _figure_checks()
    ok = report("A10", "figure tables: unimodal/ordered pulses, nested even spectra, traces from DC",
                float(len(failures)), 1, not failures)
    assert ok, failures
