import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from genlogistic import special
from genlogistic.errors import DomainError, NoConvergence, PoleError
from genlogistic.special import beta, gamma, gauss_degenerate_identity_residual, hyp2f1, pochhammer

# mpmath at 30 digits
PI_OVER_SINH_PI = 0.272029054982133162950236583672
TWO_POW_1_PLUS_I = complex(1.53847780272794425315665998732, 1.27792255262726960230006582293)


def rel(a, b):
    return abs(a - b) / abs(b)


class TestGamma:
    def test_factorials(self, backend):
        assert gamma(1) == pytest.approx(1.0, rel=1e-15)
        assert gamma(5) == pytest.approx(24.0, rel=1e-14)
        for n in range(1, 20):
            assert rel(gamma(n), math.factorial(n - 1)) < 1e-13

    def test_half(self, backend):
        assert rel(gamma(0.5), math.sqrt(math.pi)) < 1e-14

    def test_conjugate_pair(self, backend):
        assert rel(gamma(1 + 1j) * gamma(1 - 1j), PI_OVER_SINH_PI) < 1e-13

    def test_against_mpmath_strip(self, backend):
        # the accuracy contract: 1e-12 relative on |Re z| <= 20, |Im z| <= 100
        rng = np.random.default_rng(11)
        z = rng.uniform(-20, 20, 400) + 1j * rng.uniform(-100, 100, 400)
        z = z[np.abs(z - np.round(z.real)) > 1e-6]
        got = gamma(z)
        ref = np.array([complex(mpmath.gamma(mpmath.mpc(v.real, v.imag))) for v in z])
        assert np.max(np.abs(got - ref) / np.abs(ref)) < 1e-12

    @pytest.mark.parametrize("z", [0, -1, -2, -17, -3 + 1e-15, 5e-15j])
    def test_poles(self, z):
        with pytest.raises(PoleError):
            gamma(z)

    def test_near_pole_is_not_a_pole(self):
        assert np.isfinite(gamma(-3 + 1e-9))

    def test_overflow_is_an_error(self):
        with pytest.raises(DomainError):
            gamma(200.0)

    def test_array_shape_preserved(self):
        z = np.array([[1.0, 2.0], [3.0, 4.0]])
        out = gamma(z)
        assert out.shape == (2, 2)
        np.testing.assert_allclose(out.real, [[1, 1], [2, 6]], rtol=1e-14)

    def test_recurrence(self, backend):
        rng = np.random.default_rng(21)
        z = rng.uniform(-10, 10, 1000) + 1j * rng.uniform(-50, 50, 1000)
        z = z[np.abs(z - np.round(z.real)) > 1e-3]
        up = gamma(z + 1)
        assert np.max(np.abs(up - z * gamma(z)) / np.abs(up)) < 1e-12

    def test_reflection(self, backend):
        rng = np.random.default_rng(22)
        z = rng.uniform(-10, 10, 1000) + 1j * rng.uniform(-5, 5, 1000)
        z = z[np.abs(z - np.round(z.real)) > 1e-3]
        rhs = np.pi / np.sin(np.pi * z)
        assert np.max(np.abs(gamma(z) * gamma(1 - z) - rhs) / np.abs(rhs)) < 1e-11

    def test_conjugation(self, backend):
        rng = np.random.default_rng(23)
        z = rng.uniform(-10, 10, 500) + 1j * rng.uniform(-50, 50, 500)
        z = z[np.abs(z - np.round(z.real)) > 1e-3]
        g = gamma(z)
        assert np.max(np.abs(gamma(np.conj(z)) - np.conj(g)) / np.abs(g)) < 1e-13

    @pytest.mark.parametrize("y", [0.5, 1, 2, 5, 10, 20])
    def test_vertical_line_magnitude(self, backend, y):
        exact = math.sqrt(math.pi * y / math.sinh(math.pi * y))
        assert abs(abs(gamma(1 + 1j * y)) - exact) / exact < 1e-10


class TestBeta:
    def test_values(self):
        assert beta(1, 1) == pytest.approx(1.0, rel=1e-14)
        assert beta(2, 3) == pytest.approx(1 / 12, rel=1e-14)
        assert rel(beta(1 + 1j, 1 - 1j), PI_OVER_SINH_PI) < 1e-13

    @pytest.mark.parametrize("x, y", [(0, 1), (1, -0.5), (-1 + 2j, 1)])
    def test_domain(self, x, y):
        with pytest.raises(DomainError):
            beta(x, y)

    def test_symmetric(self):
        assert rel(beta(0.3 + 2j, 4.1 - 1j), beta(4.1 - 1j, 0.3 + 2j)) < 1e-14


class TestPochhammer:
    def test_values(self):
        assert pochhammer(3.7 - 2j, 0) == 1
        assert pochhammer(1, 5) == 120
        assert pochhammer(0.5, 3) == pytest.approx(15 / 8, rel=1e-15)

    @given(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
           st.integers(min_value=0, max_value=12))
    def test_ratio_of_gammas(self, x, n):
        if abs(x - round(x.real)) < 1e-2 and round(x.real) <= 0:
            return
        assert rel(pochhammer(x, n), gamma(x + n) / gamma(x)) < 1e-11 or abs(pochhammer(x, n)) < 1e-12


class TestHyp2f1:
    def test_z_zero(self):
        assert hyp2f1(0.3 + 1j, -2.5, 4, 0) == 1

    def test_log_identity(self):
        assert hyp2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-14)

    def test_degenerate(self):
        assert abs(hyp2f1(1 + 1j, 2.5, 2.5, 0.5) - TWO_POW_1_PLUS_I) < 1e-13

    def test_against_mpmath(self):
        rng = np.random.default_rng(31)
        for _ in range(30):
            a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
            c = complex(rng.uniform(0.5, 4), rng.normal())
            z = cmath.rect(rng.uniform(0, 0.8), rng.uniform(-math.pi, math.pi))
            ref = complex(mpmath.hyp2f1(a, b, c, z))
            assert abs(hyp2f1(a, b, c, z) - ref) <= 1e-12 * max(1.0, abs(ref))

    def test_terminating(self):
        # (1 - z)^2 = 2F1(-2, b; b; z)
        assert hyp2f1(-2, 3, 3, 0.4) == pytest.approx(0.36, abs=1e-15)

    @pytest.mark.parametrize("z", [1.0, -0.9995, 0.71 + 0.71j])
    def test_outside_disk(self, z):
        with pytest.raises(DomainError):
            hyp2f1(1, 1, 2, z)

    def test_nonpositive_c(self):
        with pytest.raises(DomainError):
            hyp2f1(1, 1, -3, 0.5)

    def test_cap(self):
        with pytest.raises(NoConvergence):
            hyp2f1(1, 1, 2, 0.998)
        with pytest.raises(NoConvergence):
            hyp2f1(1, 1, 2, 0.9, max_terms=50)


class TestDegenerateResidual:
    @pytest.mark.parametrize("a, z", [(1, 0), (1 + 1j, 0.5), (3, -0.5)])
    def test_examples(self, a, z):
        assert gauss_degenerate_identity_residual(a, z) < 1e-12

    def test_exact_zero_at_origin(self):
        assert gauss_degenerate_identity_residual(1, 0) == 0.0

    def test_random_sample(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            z = cmath.rect(rng.uniform(0, 0.5), rng.uniform(-math.pi, math.pi))
            assert gauss_degenerate_identity_residual(a, z) < 1e-12

    def test_error_propagates(self):
        with pytest.raises(DomainError):
            gauss_degenerate_identity_residual(1, 1.2)


def test_module_constants():
    assert special.POLE_TOL == 1e-14
    assert special.SERIES_MAX_TERMS == 10_000
